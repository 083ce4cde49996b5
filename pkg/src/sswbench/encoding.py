"""Dispatch between the two codecs by encoding id or document shape."""

from __future__ import annotations

from .es3n import encode_es3n, extract_es3n_tree
from .observation import SensorReading
from .payload import DEFAULT_OPTIONS, EncodedPayload, EncodeOptions, EncodingId
from .ssw import encode_ssw, extract_ssw_tree
from .triples import TripleSet
from .xmltree import parse

_ENCODERS = {EncodingId.SSW: encode_ssw, EncodingId.ES3N: encode_es3n}


def encode(reading: SensorReading, encoding: EncodingId | str,
           options: EncodeOptions = DEFAULT_OPTIONS) -> EncodedPayload:
    return _ENCODERS[EncodingId(encoding)](reading, options)


def detect_encoding(data: bytes) -> EncodingId:
    return EncodingId.ES3N if parse(data).tag == "rdf:RDF" else EncodingId.SSW


def extract(data: bytes | EncodedPayload) -> tuple[EncodingId, TripleSet]:
    """Parse once, pick the codec from the root element and extract its triples."""
    if isinstance(data, EncodedPayload):
        data = data.bytes
    root = parse(data)
    if root.tag == "rdf:RDF":
        return EncodingId.ES3N, extract_es3n_tree(root)
    return EncodingId.SSW, extract_ssw_tree(root)
