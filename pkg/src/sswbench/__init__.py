"""Semantic sensor-data encodings (SSW vs ES3N): codecs, triple extraction
and a multi-hop WSN transmission-cost simulator."""

from .observation import (
    DataRecord,
    PhenomenonDefinition,
    QuantityObservation,
    SensorReading,
    TimeInstant,
    UomIdentifier,
    ValidationError,
    format_double,
    make_atmospheric_record,
    reference_reading,
    validate,
)
from .payload import EncodedPayload, EncodeOptions, EncodingId, measure
from .ssw import encode_ssw, extract_ssw
from .es3n import encode_es3n, extract_es3n
from .encoding import encode, extract
from .triples import TripleSet, canonicalize, equivalent, project, to_ntriples

__version__ = "0.1.0"
