"""Reading files and sweep scenarios (TOML, checked against bundled JSON schemas)."""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .netsim import RadioEnergyModel
from .observation import (
    DataRecord,
    PhenomenonDefinition,
    QuantityObservation,
    SensorReading,
    TimeInstant,
    UomIdentifier,
    ValidationError,
    check,
    format_double,
)
from .payload import EncodeOptions, EncodingId
from .report import SimConfig

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class ConfigError(ValueError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


@lru_cache(maxsize=None)
def schema(name: str) -> dict:
    text = resources.files("sswbench").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def _check_schema(data: dict, name: str) -> None:
    validator = jsonschema.Draft202012Validator(schema(name))
    problems = []
    for err in sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path)):
        where = ".".join(str(p) for p in err.absolute_path) or "<top>"
        if err.validator == "additionalProperties":
            allowed = err.schema.get("properties", {})
            unknown = sorted(k for k in err.instance if k not in allowed)
            problems.append(f"{where}: unknown key(s): {', '.join(unknown)}")
        else:
            problems.append(f"{where}: {err.message}")
    if problems:
        raise ConfigError(problems)


def _load_toml(path: Path) -> dict:
    with open(path, "rb") as fh:
        try:
            return tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError([f"{path}: {exc}"]) from None


def reading_from_dict(data: dict) -> SensorReading:
    _check_schema(data, "reading")
    rec = data["record"]
    fields = tuple(
        QuantityObservation(
            f["name"],
            PhenomenonDefinition(f["definition"]),
            UomIdentifier(f["uom_code"], f["uom_iri"]),
            float(f["value"]),
        )
        for f in rec["fields"]
    )
    reading = SensorReading(
        data.get("sensor_id", 1),
        TimeInstant(data["timestamp"]),
        DataRecord(PhenomenonDefinition(rec["definition"]), fields),
    )
    try:
        return check(reading)
    except ValidationError as exc:
        raise ConfigError(exc.violations) from None


def load_reading(path: str | Path) -> SensorReading:
    return reading_from_dict(_load_toml(Path(path)))


def reading_to_toml(reading: SensorReading) -> str:
    """Inverse of :func:`load_reading` for the value types the format allows."""
    lines = [f"sensor_id = {reading.sensor_id}", f'timestamp = "{reading.time.timestamp}"', "",
             "[record]", f'definition = "{reading.record.definition.urn}"']
    for q in reading.record.fields:
        value = format_double(q.value)
        if "." not in value and "E" not in value:
            value += ".0"
        lines += ["", "[[record.fields]]", f'name = "{q.name}"', f'definition = "{q.definition.urn}"',
                  f'uom_code = "{q.uom.code}"', f'uom_iri = "{q.uom.iri}"', f"value = {value}"]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ScenarioConfig:
    n_list: tuple[int, ...] = tuple(range(10, 101, 10))
    seeds: tuple[int, ...] = (1, 2, 3, 4, 5)
    encodings: tuple[EncodingId, ...] = (EncodingId.SSW, EncodingId.ES3N)
    sim: SimConfig = field(default_factory=SimConfig)
    csv_path: Path = Path("sweep.csv")
    plotdata_path: Path = Path("sweep.dat")


def scenario_from_dict(data: dict, base_dir: Path = Path(".")) -> ScenarioConfig:
    _check_schema(data, "scenario")
    defaults = ScenarioConfig()
    sim = defaults.sim
    energy = RadioEnergyModel(**data.get("energy", {}))
    options = EncodeOptions(include_timestamp=data.get("include_timestamp", False),
                            es3n_header=data.get("es3n_header", False))
    sim = replace(
        sim,
        radio_range=float(data.get("radio_range", sim.radio_range)),
        area_per_node=float(data.get("area_per_node", sim.area_per_node)),
        field_side=float(data["field_side"]) if "field_side" in data else None,
        rounds=data.get("rounds", sim.rounds),
        initial_energy_j=float(data.get("initial_energy_j", sim.initial_energy_j)),
        energy=energy,
        options=options,
        workers=data.get("workers", sim.workers),
    )
    if "reading" in data:
        sim = replace(sim, template=load_reading(base_dir / data["reading"]))
    return ScenarioConfig(
        n_list=tuple(data.get("n_list", defaults.n_list)),
        seeds=tuple(data.get("seeds", defaults.seeds)),
        encodings=tuple(EncodingId(e) for e in data.get("encodings", [e.value for e in defaults.encodings])),
        sim=sim,
        csv_path=Path(data.get("csv", defaults.csv_path)),
        plotdata_path=Path(data.get("plotdata", defaults.plotdata_path)),
    )


def load_scenario(path: str | Path) -> ScenarioConfig:
    path = Path(path)
    return scenario_from_dict(_load_toml(path), path.parent)
