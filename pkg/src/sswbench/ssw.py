"""SSW form: O&M data records annotated in place with RDFa-style attributes.

Extraction mapping (subject scope is inherited by descendants):

* ``about``       sets the subject for the element and its descendants
* ``instanceof``  -> (subject, rdf:type, value)
* ``property``    -> (subject, property, object) where the object is the
  ``resource`` IRI when present, otherwise the element text, typed by
  ``datatype`` when present
* the SWE ``name`` and ``definition`` attributes inside a subject scope map
  to ``swe-om:hasName`` and ``swe:hasDefinition``
"""

from __future__ import annotations

from .observation import SensorReading, TimeInstant, check, format_double
from .payload import (
    DEFAULT_OPTIONS,
    DanglingAnnotationError,
    EncodedPayload,
    EncodeOptions,
    EncodingId,
    RdfaSpelling,
    PREFIXED_SPELLING,
    W3C_SPELLING,
)
from .triples import DEFAULT_BASE, IriRef, PlainLiteral, Triple, TripleSet, TypedLiteral, canonicalize
from .xmltree import Element, element, parse, serialize


def time_component(sensor_id: int, time: TimeInstant, sp: RdfaSpelling = PREFIXED_SPELLING) -> Element:
    return element(
        "swe:component",
        [(sp.about, f"time_{sensor_id}"), (sp.instanceof, time.type_iri)],
        [element("swe:Time", [(sp.property, "xs:date-time")], text=time.timestamp)],
    )


def encode_ssw(reading: SensorReading, options: EncodeOptions = DEFAULT_OPTIONS) -> EncodedPayload:
    check(reading)
    sp = options.rdfa
    children = []
    for q in reading.record.fields:
        uom = element("swe:uom", [
            ("code", q.uom.code),
            (sp.property, "swe-om:hasUomIdentifier"),
            (sp.resource, q.uom.iri),
        ])
        value = element("swe:value", [
            (sp.property, "swe-om:hasDoubleValue"),
            (sp.datatype, "xsd:double"),
        ], text=format_double(q.value))
        quantity = element("swe:Quantity", [("definition", q.definition.urn)], [uom, value])
        children.append(element("swe:field", [
            (sp.instanceof, "swe-om:Quantity"),
            (sp.about, "#" + q.name),
            ("name", q.name),
        ], [quantity]))
    if options.include_timestamp:
        children.append(time_component(reading.sensor_id, reading.time, sp))
    root = element("swe:DataRecord", [("definition", reading.record.definition.urn)], children)
    return EncodedPayload(serialize(root), EncodingId.SSW, options)


def detect_spelling(root: Element) -> RdfaSpelling:
    for el in root.iter():
        if any(name.startswith("rdfa:") for name in el.attrs):
            return PREFIXED_SPELLING
    return W3C_SPELLING


def extract_ssw_tree(root: Element, spelling: RdfaSpelling | None = None,
                     base: str = DEFAULT_BASE) -> TripleSet:
    sp = spelling or detect_spelling(root)
    triples: list[Triple] = []

    def need(subject, el, attr):
        if subject is None:
            raise DanglingAnnotationError(
                f"{attr} on <{el.tag}> at line {el.line}, column {el.column} has no subject in scope")
        return subject

    def walk(el: Element, subject: IriRef | None):
        if sp.about in el.attrs:
            subject = IriRef(el.attrs[sp.about])
        if sp.instanceof in el.attrs:
            need(subject, el, sp.instanceof)
            triples.append(Triple(subject, IriRef("rdf:type"), IriRef(el.attrs[sp.instanceof])))
        if sp.property in el.attrs:
            need(subject, el, sp.property)
            if sp.resource in el.attrs:
                obj = IriRef(el.attrs[sp.resource])
            elif sp.datatype in el.attrs:
                obj = TypedLiteral(el.text.strip(), el.attrs[sp.datatype])
            else:
                obj = PlainLiteral(el.text.strip())
            triples.append(Triple(subject, IriRef(el.attrs[sp.property]), obj))
        if subject is not None:
            if "name" in el.attrs:
                triples.append(Triple(subject, IriRef("swe-om:hasName"), PlainLiteral(el.attrs["name"])))
            if "definition" in el.attrs:
                triples.append(Triple(subject, IriRef("swe:hasDefinition"),
                                      TypedLiteral(el.attrs["definition"], "xsd:anyURI")))
        for child in el.children:
            walk(child, subject)

    walk(root, None)
    return canonicalize(TripleSet(tuple(triples), base=base))


def extract_ssw(payload: EncodedPayload, spelling: RdfaSpelling | None = None,
                base: str = DEFAULT_BASE) -> TripleSet:
    if payload.encoding_id is not EncodingId.SSW:
        raise ValueError(f"expected an SSW payload, got {payload.encoding_id}")
    return extract_ssw_tree(parse(payload.bytes), spelling, base)
