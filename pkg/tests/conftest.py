from pathlib import Path

import pytest
from hypothesis import strategies as st

from sswbench.observation import (
    PROPERTY_URN_PREFIX,
    DataRecord,
    PhenomenonDefinition,
    QuantityObservation,
    SensorReading,
    TimeInstant,
)
from sswbench.samples import UNITS

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "golden"
DATA = Path(__file__).resolve().parent / "data"
SCENARIOS = ROOT / "scenarios"

names = st.from_regex(r"[A-Za-z_][A-Za-z0-9_.\-]{0,15}", fullmatch=True)
finite = st.floats(allow_nan=False, allow_infinity=False)
timestamps = st.datetimes().map(lambda d: d.replace(microsecond=0).isoformat())


@st.composite
def readings(draw, min_fields=1, max_fields=10):
    field_names = draw(st.lists(names, min_size=min_fields, max_size=max_fields, unique=True))
    fields = tuple(
        QuantityObservation(
            n,
            PhenomenonDefinition(PROPERTY_URN_PREFIX + "OGC:" + draw(names)),
            draw(st.sampled_from(UNITS)),
            draw(finite),
        )
        for n in field_names
    )
    record = DataRecord(PhenomenonDefinition(PROPERTY_URN_PREFIX + "OGC:" + draw(names)), fields)
    return SensorReading(draw(st.integers(0, 10**6)), TimeInstant(draw(timestamps)), record)


@pytest.fixture
def golden():
    return GOLDEN
