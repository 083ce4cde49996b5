"""Encoded payloads and options shared by the two codecs."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class EncodingId(str, enum.Enum):
    SSW = "ssw"
    ES3N = "es3n"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class RdfaSpelling:
    """Attribute names used for the annotation vocabulary."""

    about: str
    instanceof: str
    property: str
    resource: str
    datatype: str


PREFIXED_SPELLING = RdfaSpelling("rdfa:about", "rdfa:instanceof", "rdfa:property", "rdfa:resource", "rdfa:datatype")
W3C_SPELLING = RdfaSpelling("about", "typeof", "property", "resource", "datatype")


@dataclass(frozen=True)
class EncodeOptions:
    # time component per reading; off by default
    include_timestamp: bool = False
    rdfa: RdfaSpelling = PREFIXED_SPELLING
    # prepend an ontology header with imports to ES3N documents
    es3n_header: bool = False


DEFAULT_OPTIONS = EncodeOptions()


@dataclass(frozen=True)
class EncodedPayload:
    bytes: bytes
    encoding_id: EncodingId
    options: EncodeOptions = field(default=DEFAULT_OPTIONS, compare=False, repr=False)

    @property
    def size_bytes(self) -> int:
        return len(self.bytes)

    def text(self) -> str:
        return self.bytes.decode("utf-8")


def measure(payload: EncodedPayload) -> int:
    return payload.size_bytes


class ExtractionError(ValueError):
    """The document parsed but its annotations cannot be mapped to triples."""


class DanglingAnnotationError(ExtractionError):
    pass


class DanglingReferenceError(ExtractionError):
    pass
