"""ES3N form: each quantity and the record as explicit ontology individuals.

Extraction follows RDF/XML striping for the flat subset the encoder emits:
node elements with ``rdf:ID`` (or ``rdf:about``) directly under ``rdf:RDF``,
each holding property elements that carry either ``rdf:resource`` or text.
"""

from __future__ import annotations

from .observation import SensorReading, check, format_double
from .payload import (
    DEFAULT_OPTIONS,
    DanglingReferenceError,
    EncodedPayload,
    EncodeOptions,
    EncodingId,
    ExtractionError,
)
from .triples import (
    DEFAULT_BASE,
    HAS_FIELD,
    XSD,
    IriRef,
    PlainLiteral,
    Triple,
    TripleSet,
    TypedLiteral,
    canonicalize,
)
from .xmltree import Element, element, parse, serialize

XSD_DOUBLE = XSD + "double"
XSD_ANYURI = XSD + "anyURI"
ONTOLOGY_IMPORTS = (
    "http://www.opengis.net/swe-om/1.0",
    "http://www.w3.org/2006/time",
    "http://sweet.jpl.nasa.gov/ontology/units.owl",
)


def _definition(urn: str) -> Element:
    return element("swe:hasDefinition", [("rdf:datatype", XSD_ANYURI)], text=urn)


def encode_es3n(reading: SensorReading, options: EncodeOptions = DEFAULT_OPTIONS) -> EncodedPayload:
    check(reading)
    record = reading.record
    individuals = []
    if options.es3n_header:
        individuals.append(element("owl:Ontology", [("rdf:about", "")], [
            element("owl:imports", [("rdf:resource", iri)]) for iri in ONTOLOGY_IMPORTS
        ]))
    for q in record.fields:
        individuals.append(element("swe-om:Quantity", [("rdf:ID", f"Quantity_{q.name}")], [
            element("swe-om:hasUomIdentifier", [("rdf:resource", q.uom.iri)]),
            element("swe-om:hasDoubleValue", [("rdf:datatype", XSD_DOUBLE)], text=format_double(q.value)),
            element("swe-om:hasName", [("xml:lang", "en")], text=q.name),
            _definition(q.definition.urn),
        ]))
    refs = [element("swe-om:hasField", [("rdf:resource", f"#Quantity_{q.name}")]) for q in record.fields]
    individuals.append(element("swe-om:DataRecord", [("rdf:ID", f"DataRecord_{record.name}")],
                               refs + [_definition(record.definition.urn)]))
    if options.include_timestamp:
        individuals.append(element("time:Instant", [("rdf:ID", f"time_{reading.sensor_id}")], [
            element("xs:date-time", text=reading.time.timestamp),
        ]))
    root = element("rdf:RDF", children=individuals)
    return EncodedPayload(serialize(root), EncodingId.ES3N, options)


def extract_es3n_tree(root: Element, base: str = DEFAULT_BASE) -> TripleSet:
    nodes = root.children if root.tag == "rdf:RDF" else [root]
    triples: list[Triple] = []
    for node in nodes:
        if "rdf:ID" in node.attrs:
            subject = IriRef("#" + node.attrs["rdf:ID"])
        elif "rdf:about" in node.attrs:
            # an empty reference names the document itself
            subject = IriRef(node.attrs["rdf:about"] or base)
        else:
            continue
        if node.tag != "rdf:Description":
            triples.append(Triple(subject, IriRef("rdf:type"), IriRef(node.tag)))
        for prop in node.children:
            if prop.children:
                raise ExtractionError(
                    f"nested node element in <{prop.tag}> at line {prop.line} is not supported")
            if "rdf:resource" in prop.attrs:
                obj = IriRef(prop.attrs["rdf:resource"])
            elif "rdf:datatype" in prop.attrs:
                obj = TypedLiteral(prop.text.strip(), prop.attrs["rdf:datatype"])
            else:
                obj = PlainLiteral(prop.text.strip(), prop.attrs.get("xml:lang"))
            triples.append(Triple(subject, IriRef(prop.tag), obj))

    ts = canonicalize(TripleSet(tuple(triples), base=base))
    defined = {t.subject for t in ts}
    dangling = sorted(t.object.n3() for t in ts if t.predicate.value == HAS_FIELD and t.object not in defined)
    if dangling:
        raise DanglingReferenceError(f"hasField references undefined individuals: {', '.join(dangling)}")
    return ts


def extract_es3n(payload: EncodedPayload, base: str = DEFAULT_BASE) -> TripleSet:
    if payload.encoding_id is not EncodingId.ES3N:
        raise ValueError(f"expected an ES3N payload, got {payload.encoding_id}")
    return extract_es3n_tree(parse(payload.bytes), base)
