"""Sensor observation types shared by both codecs and the simulator.

Types are frozen dataclasses that accept any field values; use
:func:`validate` to list invariant violations, or :func:`check` to raise
with all of them.  Encoders call :func:`check` before serializing.
"""

from __future__ import annotations

import math
import re
import random
from dataclasses import dataclass, field, replace
from datetime import datetime
from decimal import Decimal
from urllib.parse import urlsplit

PROPERTY_URN_PREFIX = "urn:ogc:def:property:"
UNITS_ONTOLOGY = "http://sweet.jpl.nasa.gov/ontology/units.owl#"
TIME_INSTANT = "time:Instant"

# UCUM-style unit codes: short, printable ASCII, nothing that needs XML escaping
_UOM_CODE = re.compile(r"^[!#-%'-;=?-~]{1,16}$")

_NCNAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")
_ISO_DATETIME = re.compile(
    r"^(\d{4})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?(Z|[+-]\d{2}:\d{2})?$"
)
_FORBIDDEN_IRI_CHARS = re.compile(r"[\s<>\"{}|\\^`\x00-\x1f]")


class ValidationError(ValueError):
    """Raised when a value or reading breaks one of the observation invariants."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class PhenomenonDefinition:
    urn: str

    @property
    def local_name(self) -> str:
        return self.urn.rsplit(":", 1)[-1]


@dataclass(frozen=True)
class UomIdentifier:
    code: str
    iri: str


CELSIUS = UomIdentifier("Cel", UNITS_ONTOLOGY + "degreeC")
METER_PER_SECOND = UomIdentifier("m/s", UNITS_ONTOLOGY + "meter_persecond")


@dataclass(frozen=True)
class QuantityObservation:
    name: str
    definition: PhenomenonDefinition
    uom: UomIdentifier
    value: float


@dataclass(frozen=True)
class TimeInstant:
    timestamp: str
    type_iri: str = TIME_INSTANT


@dataclass(frozen=True)
class DataRecord:
    definition: PhenomenonDefinition
    fields: tuple[QuantityObservation, ...] = field(default_factory=tuple)

    def __post_init__(self):
        # accept any iterable of fields but store a tuple so records stay hashable
        object.__setattr__(self, "fields", tuple(self.fields))

    @property
    def name(self) -> str:
        local = self.definition.local_name
        return local[:1].upper() + local[1:]


@dataclass(frozen=True)
class SensorReading:
    sensor_id: int
    time: TimeInstant
    record: DataRecord

    def with_sensor(self, sensor_id: int) -> "SensorReading":
        return replace(self, sensor_id=sensor_id)


def format_double(value: float) -> str:
    """Shortest decimal text that parses back to exactly ``value``.

    Plain notation for magnitudes in [1e-4, 1e15) and for zero, otherwise
    ``<mantissa>E<exponent>``.  Integral values carry no fractional part
    (``-40.0`` -> ``"-40"``).
    """
    if not math.isfinite(value):
        raise ValidationError(f"non-finite value: {value!r}")
    if value == 0:
        return "-0" if math.copysign(1.0, value) < 0 else "0"
    dec = Decimal(repr(value)).normalize()
    if 1e-4 <= abs(value) < 1e15:
        return format(dec, "f")
    sign, digits, _ = dec.as_tuple()
    mantissa = str(digits[0])
    if len(digits) > 1:
        mantissa += "." + "".join(map(str, digits[1:]))
    return f"{'-' if sign else ''}{mantissa}E{dec.adjusted()}"


def parse_double(text: str) -> float:
    return float(text)


def perturb_value(value: float, rng: random.Random) -> float:
    """Replace the last mantissa digit of ``value``'s canonical text.

    The result formats to a string of the same length, so encoded payload
    sizes do not change.  Returns ``value`` unchanged when no digit swap
    survives the canonical round trip.
    """
    text = format_double(value)
    end = text.find("E")
    pos = (len(text) if end < 0 else end) - 1
    candidates = []
    for digit in "123456789":
        cand = text[:pos] + digit + text[pos + 1:]
        if math.isfinite(float(cand)) and format_double(float(cand)) == cand:
            candidates.append(float(cand))
    if not candidates:
        return value
    return rng.choice(candidates)


def is_absolute_iri(iri: str) -> bool:
    if not iri or _FORBIDDEN_IRI_CHARS.search(iri):
        return False
    parts = urlsplit(iri)
    if not parts.scheme:
        return False
    return bool(parts.netloc) or parts.scheme == "urn"


def is_valid_timestamp(text: str) -> bool:
    m = _ISO_DATETIME.match(text)
    if not m:
        return False
    try:
        datetime(*(int(g) for g in m.groups()[:6]))
    except ValueError:
        return False
    return True


def _definition_violations(defn: PhenomenonDefinition, what: str) -> list[str]:
    urn = defn.urn
    if not urn.startswith(PROPERTY_URN_PREFIX) or len(urn) == len(PROPERTY_URN_PREFIX):
        return [f"bad definition for {what}: {urn!r}"]
    if _FORBIDDEN_IRI_CHARS.search(urn):
        return [f"bad definition for {what}: {urn!r} contains forbidden characters"]
    return []


def validate_record(record: DataRecord) -> list[str]:
    out = _definition_violations(record.definition, "record")
    if not out and not _NCNAME.match(record.definition.local_name):
        out.append(f"bad record definition: {record.definition.urn!r} does not end in a name")
    if not record.fields:
        out.append("empty record")
    seen = set()
    for q in record.fields:
        if q.name in seen:
            out.append(f"duplicate field: {q.name}")
        seen.add(q.name)
        if not _NCNAME.match(q.name or ""):
            out.append(f"bad field name: {q.name!r}")
        out.extend(_definition_violations(q.definition, q.name))
        code = q.uom.code
        if not isinstance(code, str) or not _UOM_CODE.match(code):
            out.append(f"bad uom code for {q.name}: {code!r}")
        if not is_absolute_iri(q.uom.iri):
            out.append(f"bad uom iri for {q.name}: {q.uom.iri!r}")
        if not isinstance(q.value, (int, float)) or not math.isfinite(q.value):
            out.append(f"non-finite value for {q.name}: {q.value!r}")
    return out


def validate(reading: SensorReading) -> list[str]:
    """Return every violated invariant; an empty list means the reading is ok."""
    out = []
    if not isinstance(reading.sensor_id, int) or reading.sensor_id < 0:
        out.append(f"bad sensor id: {reading.sensor_id!r}")
    if not is_valid_timestamp(reading.time.timestamp):
        out.append(f"bad timestamp: {reading.time.timestamp!r}")
    if reading.time.type_iri != TIME_INSTANT:
        out.append(f"bad time type: {reading.time.type_iri!r}")
    out.extend(validate_record(reading.record))
    return out


def check(reading: SensorReading) -> SensorReading:
    violations = validate(reading)
    if violations:
        raise ValidationError(violations)
    return reading


ATMOSPHERIC_CONDITIONS = PhenomenonDefinition(PROPERTY_URN_PREFIX + "OGC:atmosphericConditions")
AIR_TEMPERATURE = PhenomenonDefinition(PROPERTY_URN_PREFIX + "OGC:AirTemperature")
WIND_SPEED = PhenomenonDefinition(PROPERTY_URN_PREFIX + "OGC:WinSpeed")

REFERENCE_TIMESTAMP = "2010-03-08T05:00:00"


def make_atmospheric_record(temp_celsius: float, windspeed_ms: float) -> DataRecord:
    for v in (temp_celsius, windspeed_ms):
        if not math.isfinite(v):
            raise ValidationError(f"non-finite value: {v!r}")
    return DataRecord(
        ATMOSPHERIC_CONDITIONS,
        (
            QuantityObservation("AirTemperature", AIR_TEMPERATURE, CELSIUS, float(temp_celsius)),
            QuantityObservation("WinSpeed", WIND_SPEED, METER_PER_SECOND, float(windspeed_ms)),
        ),
    )


def reference_reading(sensor_id: int = 1) -> SensorReading:
    """The reference weather reading: 35.1 Cel air temperature, 6.5 m/s wind."""
    return SensorReading(sensor_id, TimeInstant(REFERENCE_TIMESTAMP), make_atmospheric_record(35.1, 6.5))
