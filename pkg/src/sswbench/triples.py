"""RDF triple model, canonical form and the codec-neutral projection.

Both encodings are judged by what they say, not how they say it: two
triple sets are *equivalent* when they describe the same quantities
(name, phenomenon URN, unit IRI, value text), even if their individuals
are named differently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Union
from urllib.parse import urljoin

from .observation import DataRecord, format_double

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD = "http://www.w3.org/2001/XMLSchema#"
SWE = "http://www.opengis.net/swe/1.0.1#"
SWE_OM = "http://www.opengis.net/swe-om/1.0#"
TIME = "http://www.w3.org/2006/time#"
OWL = "http://www.w3.org/2002/07/owl#"
OWL_UNITS = "http://sweet.jpl.nasa.gov/ontology/units.owl#"

# Documents use these prefixes without declaring them, so the table is fixed.
NAMESPACES: Mapping[str, str] = MappingProxyType({
    "rdf": RDF,
    "xs": XSD,
    "xsd": XSD,
    "swe": SWE,
    "swe-om": SWE_OM,
    "time": TIME,
    "owl": OWL,
    "owl-units": OWL_UNITS,
})

DEFAULT_BASE = "http://example.org/wsn/reading"

RDF_TYPE = RDF + "type"
HAS_VALUE = SWE_OM + "hasDoubleValue"
HAS_UOM = SWE_OM + "hasUomIdentifier"
HAS_NAME = SWE_OM + "hasName"
HAS_DEFINITION = SWE + "hasDefinition"
HAS_FIELD = SWE_OM + "hasField"


class UnresolvedPrefixError(KeyError):
    def __init__(self, prefix: str):
        self.prefix = prefix
        super().__init__(f"unresolvable prefix {prefix!r}")

    def __str__(self):
        return self.args[0]


class ProjectionError(ValueError):
    """A value-bearing subject lacks its unit or definition."""

    def __init__(self, subjects: dict[str, list[str]]):
        self.subjects = subjects
        detail = ", ".join(f"{s} (missing {'/'.join(m)})" for s, m in sorted(subjects.items()))
        super().__init__(f"incomplete quantities: {detail}")


@dataclass(frozen=True)
class IriRef:
    value: str

    def n3(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True)
class TypedLiteral:
    lexical: str
    datatype: str

    def n3(self) -> str:
        return f'"{_escape(self.lexical)}"^^<{self.datatype}>'


@dataclass(frozen=True)
class PlainLiteral:
    lexical: str
    lang: str | None = None

    def n3(self) -> str:
        quoted = f'"{_escape(self.lexical)}"'
        return f"{quoted}@{self.lang}" if self.lang else quoted


Term = Union[IriRef, TypedLiteral, PlainLiteral]


@dataclass(frozen=True)
class Triple:
    subject: IriRef
    predicate: IriRef
    object: Term

    def __post_init__(self):
        if not isinstance(self.subject, IriRef) or not isinstance(self.predicate, IriRef):
            raise TypeError("subject and predicate must be IRI references")
        if not self.subject.value or not self.predicate.value:
            raise ValueError("empty IRI reference")

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."


@dataclass(frozen=True)
class TripleSet:
    triples: tuple[Triple, ...] = ()
    namespaces: Mapping[str, str] = field(default=NAMESPACES, compare=False, repr=False)
    base: str = field(default=DEFAULT_BASE, compare=False, repr=False)
    canonical: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(self.triples))

    def __iter__(self):
        return iter(self.triples)

    def __len__(self):
        return len(self.triples)

    def __contains__(self, item):
        return item in self.triples


class Quantity(NamedTuple):
    name: str
    definition: str
    uom: str
    value: str


SemanticProjection = frozenset  # of Quantity


def expand_iri(text: str, namespaces: Mapping[str, str] = NAMESPACES, base: str = DEFAULT_BASE) -> str:
    """Expand a prefixed name or resolve a relative reference to an absolute IRI."""
    if "://" in text or text.startswith("urn:"):
        return text
    if ":" in text:
        prefix, local = text.split(":", 1)
        try:
            return namespaces[prefix] + local
        except KeyError:
            raise UnresolvedPrefixError(prefix) from None
    return urljoin(base, text)


def _expand_term(term: Term, ts: TripleSet) -> Term:
    if isinstance(term, IriRef):
        return IriRef(expand_iri(term.value, ts.namespaces, ts.base))
    if isinstance(term, TypedLiteral):
        return TypedLiteral(term.lexical, expand_iri(term.datatype, ts.namespaces, ts.base))
    return term


def canonicalize(ts: TripleSet) -> TripleSet:
    """Expand every name, drop duplicates, order by serialized form."""
    if ts.canonical:
        return ts
    expanded = {
        Triple(_expand_term(t.subject, ts), _expand_term(t.predicate, ts), _expand_term(t.object, ts))
        for t in ts.triples
    }
    ordered = sorted(expanded, key=lambda t: (t.subject.n3(), t.predicate.n3(), t.object.n3()))
    return TripleSet(tuple(ordered), ts.namespaces, ts.base, canonical=True)


def _lexical(term: Term) -> str:
    return term.value if isinstance(term, IriRef) else term.lexical


def _local_name(iri: str) -> str:
    return re.split(r"[#/:]", iri)[-1]


def project(ts: TripleSet) -> frozenset[Quantity]:
    """Collapse a triple set to one (name, definition, uom, value) row per valued subject."""
    ts = canonicalize(ts)
    by_subject: dict[str, dict[str, list[Term]]] = {}
    for t in ts:
        by_subject.setdefault(t.subject.value, {}).setdefault(t.predicate.value, []).append(t.object)

    rows = set()
    incomplete: dict[str, list[str]] = {}
    for subject, props in by_subject.items():
        values = props.get(HAS_VALUE)
        if not values:
            continue
        missing = [label for label, pred in (("uom", HAS_UOM), ("definition", HAS_DEFINITION))
                   if len(props.get(pred, ())) != 1]
        if len(values) != 1:
            missing.append("single value")
        if missing:
            incomplete[subject] = missing
            continue
        names = props.get(HAS_NAME)
        name = _lexical(names[0]) if names else _local_name(subject)
        rows.add(Quantity(
            name,
            _lexical(props[HAS_DEFINITION][0]),
            _lexical(props[HAS_UOM][0]),
            _lexical(values[0]),
        ))
    if incomplete:
        raise ProjectionError(incomplete)
    return frozenset(rows)


def equivalent(a: TripleSet, b: TripleSet) -> bool:
    return project(a) == project(b)


def record_projection(record: DataRecord) -> frozenset[Quantity]:
    """Projection computed straight from a record, bypassing any codec."""
    return frozenset(
        Quantity(q.name, q.definition.urn, q.uom.iri, format_double(q.value)) for q in record.fields
    )


# -- N-Triples lines ---------------------------------------------------------

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}
_UNESCAPES = {v: k for k, v in _ESCAPES.items()}


def _escape(text: str) -> str:
    return "".join(_ESCAPES.get(c, c) for c in text)


def _unescape(text: str) -> str:
    return re.sub(r"\\[\\\"nrt]", lambda m: _UNESCAPES[m.group(0)], text)


def to_ntriples(ts: TripleSet) -> str:
    """One line per triple in canonical order, each ending in ' .'."""
    return "".join(t.n3() + "\n" for t in canonicalize(ts))


_IRI = r"<([^<>\s]*)>"
_LITERAL = r'"((?:[^"\\]|\\.)*)"(?:\^\^<([^<>\s]*)>|@([A-Za-z]+(?:-[A-Za-z0-9]+)*))?'
_LINE = re.compile(rf"^{_IRI} {_IRI} (?:{_IRI}|{_LITERAL}) \.$")


def parse_ntriples(text: str) -> TripleSet:
    triples = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _LINE.match(line.strip())
        if not m:
            raise ValueError(f"line {lineno}: not an N-Triples statement: {line!r}")
        s, p, o_iri, lex, dt, lang = m.groups()
        if o_iri is not None:
            obj: Term = IriRef(o_iri)
        elif dt is not None:
            obj = TypedLiteral(_unescape(lex), dt)
        else:
            obj = PlainLiteral(_unescape(lex), lang)
        triples.append(Triple(IriRef(s), IriRef(p), obj))
    return canonicalize(TripleSet(tuple(triples)))


def make_triple_set(triples: Iterable[Triple], base: str = DEFAULT_BASE) -> TripleSet:
    return canonicalize(TripleSet(tuple(triples), NAMESPACES, base))
