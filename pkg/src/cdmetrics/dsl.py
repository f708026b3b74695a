"""Line-oriented textual DSL for class diagrams, plus a structured-data form.

Grammar (one construct per line, ``#`` starts a comment, blank lines ignored)::

    diagram <identifier>        # optional, at most once, first construct
    class <Name> {
      attr <name>
      method <name>
    }
    assoc <A> -- <B>
    agg <Whole> o- <Part>
    dep <A> -> <B>
    gen <Child> => <Parent>

Identifiers match ``[A-Za-z_][A-Za-z0-9_]*``.  A class body's closing ``}``
may stand alone on its line, follow the last body entry, or close an empty
body on the ``class`` line itself (``class A {}``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import ClassDecl, ClassDiagram, RelKind, Relationship
from .errors import DslSyntaxError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_ARROWS = {
    "assoc": ("--", RelKind.ASSOCIATION),
    "agg": ("o-", RelKind.AGGREGATION),
    "dep": ("->", RelKind.DEPENDENCY),
    "gen": ("=>", RelKind.GENERALIZATION),
}


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int

    def __post_init__(self):
        if self.line < 1 or self.column < 1:
            raise ValueError("line and column are 1-based")


class _Line:
    """One source line split into whitespace tokens with 1-based columns."""

    def __init__(self, number: int, raw: str):
        self.number = number
        code = raw.split("#", 1)[0]
        self.tokens = [
            (m.start() + 1, m.group()) for m in re.finditer(r"\S+", code)
        ]

    def span(self, index: int) -> SourceSpan:
        if index < len(self.tokens):
            return SourceSpan(self.number, self.tokens[index][0])
        # point just past the last token for "missing token" errors
        if self.tokens:
            col, tok = self.tokens[-1]
            return SourceSpan(self.number, col + len(tok))
        return SourceSpan(self.number, 1)

    def fail(self, index: int, message: str):
        raise DslSyntaxError(self.span(index), message)

    def ident(self, index: int, what: str) -> str:
        if index >= len(self.tokens):
            self.fail(index, f"expected {what}")
        token = self.tokens[index][1]
        if not _IDENT.match(token):
            self.fail(index, f"illegal identifier {token!r} for {what}")
        return token

    def expect(self, index: int, literal: str, what: str):
        if index >= len(self.tokens) or self.tokens[index][1] != literal:
            self.fail(index, f"expected {what} {literal!r}")

    def end(self, index: int):
        if index < len(self.tokens):
            self.fail(index, f"unexpected token {self.tokens[index][1]!r}")


def parse(source: str) -> ClassDiagram:
    """Parse DSL text into an (unvalidated) ClassDiagram in declaration order."""
    lines = [
        _Line(i, raw) for i, raw in enumerate(source.splitlines(), start=1)
    ]
    lines = [ln for ln in lines if ln.tokens]

    diagram_id = "unnamed"
    classes: list[ClassDecl] = []
    relationships: list[Relationship] = []

    pos = 0
    if lines and lines[0].tokens[0][1] == "diagram":
        header = lines[0]
        diagram_id = header.ident(1, "diagram name")
        header.end(2)
        pos = 1

    while pos < len(lines):
        line = lines[pos]
        keyword = line.tokens[0][1]
        if keyword == "class":
            name = line.ident(1, "class name")
            tail = [t for _, t in line.tokens[2:]]
            attrs: list[str] = []
            methods: list[str] = []

            def body_entry(entry_line: _Line, start: int) -> bool:
                """Consume one body entry from token `start` on; True if } seen."""
                head = entry_line.tokens[start][1]
                if head == "}":
                    entry_line.end(start + 1)
                    return True
                if head not in ("attr", "method"):
                    entry_line.fail(
                        start,
                        f"expected 'attr', 'method' or '}}' in class body, got {head!r}",
                    )
                member = entry_line.ident(start + 1, f"{head} name")
                (attrs if head == "attr" else methods).append(member)
                rest = [t for _, t in entry_line.tokens[start + 2:]]
                if rest == ["}"]:
                    return True
                entry_line.end(start + 2)
                return False

            if tail[:1] == ["{}"]:
                line.end(3)
                classes.append(ClassDecl(name))
                pos += 1
                continue
            line.expect(2, "{", "class body opener")
            closed = bool(tail[1:]) and body_entry(line, 3)
            pos += 1
            while not closed and pos < len(lines):
                closed = body_entry(lines[pos], 0)
                pos += 1
            if not closed:
                lines[-1].fail(len(lines[-1].tokens), f"unterminated body of class {name!r}")
            classes.append(ClassDecl(name, tuple(attrs), tuple(methods)))
        elif keyword in _ARROWS:
            arrow, kind = _ARROWS[keyword]
            left = line.ident(1, "class name")
            line.expect(2, arrow, "arrow")
            right = line.ident(3, "class name")
            line.end(4)
            relationships.append(Relationship(kind, left, right))
            pos += 1
        elif keyword == "diagram":
            line.fail(0, "'diagram' header allowed only as the first construct")
        else:
            line.fail(0, f"unknown keyword {keyword!r}")

    return ClassDiagram(diagram_id, tuple(classes), tuple(relationships))


def serialize(diagram: ClassDiagram) -> str:
    """Canonical DSL text: header, classes, then assoc, agg, dep, gen.

    Within each section the source order is kept, so parse(serialize(d))
    equals d.
    """
    out = [f"diagram {diagram.id}"]
    for cls in diagram.classes:
        if not cls.attributes and not cls.methods:
            out.append(f"class {cls.name} {{}}")
            continue
        out.append(f"class {cls.name} {{")
        out.extend(f"  attr {a}" for a in cls.attributes)
        out.extend(f"  method {m}" for m in cls.methods)
        out.append("}")
    for keyword, (arrow, kind) in _ARROWS.items():
        for rel in diagram.by_kind(kind):
            out.append(f"{keyword} {rel.source} {arrow} {rel.target}")
    return "\n".join(out) + "\n"


def to_dict(diagram: ClassDiagram) -> dict:
    """Structured-data export with exact field names id/classes/relationships."""
    return {
        "id": diagram.id,
        "classes": [
            {
                "name": c.name,
                "attributes": list(c.attributes),
                "methods": list(c.methods),
            }
            for c in diagram.classes
        ],
        "relationships": [
            {"kind": r.kind.value, "from": r.source, "to": r.target}
            for r in diagram.relationships
        ],
    }


def from_dict(data: dict) -> ClassDiagram:
    """Structured-data import; inverse of to_dict."""
    classes = tuple(
        ClassDecl(c["name"], tuple(c.get("attributes", ())), tuple(c.get("methods", ())))
        for c in data.get("classes", ())
    )
    relationships = tuple(
        Relationship(RelKind(r["kind"].lower()), r["from"], r["to"])
        for r in data.get("relationships", ())
    )
    return ClassDiagram(data.get("id", "unnamed"), classes, relationships)
