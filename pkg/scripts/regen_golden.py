"""Regenerate the golden XML and N-Triples files under golden/.

Run only when the canonical form changes on purpose; the test suite
compares fresh output against these files byte for byte.
"""

from pathlib import Path

from sswbench import encode_es3n, encode_ssw, reference_reading
from sswbench.encoding import extract
from sswbench.observation import REFERENCE_TIMESTAMP, DataRecord, SensorReading, TimeInstant
from sswbench.ssw import time_component
from sswbench.triples import to_ntriples
from sswbench.xmltree import serialize

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


def write(name: str, data: bytes) -> None:
    (GOLDEN / f"{name}.xml").write_bytes(data)
    (GOLDEN / f"{name}.nt").write_text(to_ntriples(extract(data)[1]))
    print(f"{name}.xml {len(data)} bytes")


def main():
    GOLDEN.mkdir(exist_ok=True)
    reading = reference_reading()
    one_field = SensorReading(1, reading.time, DataRecord(reading.record.definition, reading.record.fields[:1]))
    write("ssw_timestamp", serialize(time_component(1, TimeInstant(REFERENCE_TIMESTAMP))))
    write("ssw_atmos", encode_ssw(reading).bytes)
    write("es3n_atmos", encode_es3n(reading).bytes)
    write("ssw_one_field", encode_ssw(one_field).bytes)
    write("es3n_one_field", encode_es3n(one_field).bytes)


if __name__ == "__main__":
    main()
