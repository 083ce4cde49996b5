"""Minimal XML tree with one canonical serialization.

Canonical form: two-space indentation per nesting level, one element per
line, text-only elements kept on one line, empty elements self-closed,
attributes in insertion order, double quotes, a single trailing newline.

Parsing is plain XML 1.0 (no namespace processing): the documents use
fixed, undeclared prefixes which are resolved later against the shared
namespace table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.parsers import expat

INDENT = "  "


class XmlSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"malformed XML at line {line}, column {column}: {message}")


@dataclass
class Element:
    tag: str
    attrs: dict[str, str] = field(default_factory=dict)
    children: list["Element"] = field(default_factory=list)
    text: str = ""
    line: int = 0
    column: int = 0

    def get(self, name: str, default=None):
        return self.attrs.get(name, default)

    def iter(self):
        yield self
        for child in self.children:
            yield from child.iter()


def element(tag: str, attrs=(), children=(), text: str = "") -> Element:
    return Element(tag, dict(attrs), list(children), text)


def _escape_text(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _escape_attr(text: str) -> str:
    return _escape_text(text).replace('"', "&quot;")


def _write(el: Element, level: int, out: list[str]) -> None:
    attrs = "".join(f' {k}="{_escape_attr(v)}"' for k, v in el.attrs.items())
    if not el.children:
        if el.text:
            out.append(f"<{el.tag}{attrs}>{_escape_text(el.text)}</{el.tag}>")
        else:
            out.append(f"<{el.tag}{attrs}/>")
        return
    out.append(f"<{el.tag}{attrs}>")
    pad = "\n" + INDENT * (level + 1)
    for child in el.children:
        out.append(pad)
        _write(child, level + 1, out)
    out.append("\n" + INDENT * level + f"</{el.tag}>")


def serialize(root: Element) -> bytes:
    if root.text and root.children:
        raise ValueError("mixed content is not representable in canonical form")
    out: list[str] = []
    _write(root, 0, out)
    out.append("\n")
    return "".join(out).encode("utf-8")


def parse(data: bytes | str) -> Element:
    """Parse a document into an Element tree; raise XmlSyntaxError with position."""
    parser = expat.ParserCreate()
    parser.ordered_attributes = True
    stack: list[Element] = []
    roots: list[Element] = []

    def start(tag, attr_list):
        el = Element(tag, dict(zip(attr_list[::2], attr_list[1::2])),
                     line=parser.CurrentLineNumber, column=parser.CurrentColumnNumber)
        if stack:
            stack[-1].children.append(el)
        else:
            roots.append(el)
        stack.append(el)

    def end(tag):
        stack.pop()

    def chars(text):
        if stack:
            stack[-1].text += text

    parser.StartElementHandler = start
    parser.EndElementHandler = end
    parser.CharacterDataHandler = chars
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        parser.Parse(data, True)
    except expat.ExpatError as exc:
        raise XmlSyntaxError(expat.ErrorString(exc.code), exc.lineno, exc.offset) from None
    return roots[0]
