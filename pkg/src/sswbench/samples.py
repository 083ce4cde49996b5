"""Seeded generator of random valid readings for size and equivalence checks."""

from __future__ import annotations

import random
import string

from .observation import (
    PROPERTY_URN_PREFIX,
    UNITS_ONTOLOGY,
    DataRecord,
    PhenomenonDefinition,
    QuantityObservation,
    SensorReading,
    TimeInstant,
    UomIdentifier,
)

UNITS = (
    UomIdentifier("Cel", UNITS_ONTOLOGY + "degreeC"),
    UomIdentifier("m/s", UNITS_ONTOLOGY + "meter_persecond"),
    UomIdentifier("hPa", UNITS_ONTOLOGY + "hectopascal"),
    UomIdentifier("%", UNITS_ONTOLOGY + "percent"),
    UomIdentifier("mm", UNITS_ONTOLOGY + "millimeter"),
    UomIdentifier("deg", UNITS_ONTOLOGY + "degree"),
    UomIdentifier("W/m2", UNITS_ONTOLOGY + "watt_per_square_meter"),
    UomIdentifier("lx", UNITS_ONTOLOGY + "lux"),
)

_FIRST = string.ascii_letters + "_"
_REST = string.ascii_letters + string.digits + "_.-"


def _name(rng: random.Random) -> str:
    return rng.choice(_FIRST) + "".join(rng.choice(_REST) for _ in range(rng.randrange(0, 16)))


def _value(rng: random.Random) -> float:
    kind = rng.random()
    if kind < 0.5:
        return round(rng.uniform(-100, 100), rng.randrange(0, 4))
    if kind < 0.9:
        return rng.uniform(-1e6, 1e6)
    return rng.choice([0.0, -0.0, 1e-7, -3.5e20, 12345678901234567.0, 5e-324])


def random_reading(rng: random.Random, n_fields: int | None = None) -> SensorReading:
    """A valid reading with 1-10 (or ``n_fields``) uniquely named quantities."""
    if n_fields is None:
        n_fields = rng.randint(1, 10)
    names: list[str] = []
    while len(names) < n_fields:
        name = _name(rng)
        if name not in names:
            names.append(name)
    fields = tuple(
        QuantityObservation(
            name,
            PhenomenonDefinition(PROPERTY_URN_PREFIX + "OGC:" + _name(rng).replace(".", "")),
            rng.choice(UNITS),
            _value(rng),
        )
        for name in names
    )
    record_def = PhenomenonDefinition(PROPERTY_URN_PREFIX + "OGC:" + rng.choice(string.ascii_letters) + _name(rng))
    ts = f"{rng.randint(1990, 2030):04d}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}T" \
         f"{rng.randint(0, 23):02d}:{rng.randint(0, 59):02d}:{rng.randint(0, 59):02d}"
    return SensorReading(rng.randint(0, 10_000), TimeInstant(ts), DataRecord(record_def, fields))
