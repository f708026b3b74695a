"""Immutable in-memory class-diagram model with structural validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import (
    AggregationCycle,
    DuplicateClass,
    DuplicateHierarchyEdge,
    GeneralizationCycle,
    UnknownEndpoint,
)

IDENTIFIER_RE = r"[A-Za-z_][A-Za-z0-9_]*"


class RelKind(Enum):
    ASSOCIATION = "association"
    AGGREGATION = "aggregation"
    DEPENDENCY = "dependency"
    GENERALIZATION = "generalization"


# Kinds whose edge sets must be simple (no duplicate pairs) and acyclic.
HIERARCHY_KINDS = (RelKind.AGGREGATION, RelKind.GENERALIZATION)


@dataclass(frozen=True)
class ClassDecl:
    """A class with its declared attribute and method names, in source order."""

    name: str
    attributes: tuple[str, ...] = ()
    methods: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise ValueError("class name must be non-empty")
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "methods", tuple(self.methods))
        for label, names in (("attribute", self.attributes), ("method", self.methods)):
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate {label} name in class {self.name!r}")


@dataclass(frozen=True)
class Relationship:
    """An edge between two declared classes.

    Directionality by kind: aggregation is whole -> part, dependency is
    source -> target, generalization is child -> parent.  Association keeps
    the written order but carries no direction.
    """

    kind: RelKind
    source: str
    target: str


@dataclass(frozen=True, eq=False)
class ClassDiagram:
    """A named set of classes plus relationships, in declaration order.

    Equality is structural: same id, same classes in order, and the same
    per-kind relationship sequences.  The interleaving of different kinds in
    the relationship list is presentation order only, so canonical
    serialization (which groups by kind) round-trips to an equal diagram.
    """

    id: str = "unnamed"
    classes: tuple[ClassDecl, ...] = ()
    relationships: tuple[Relationship, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "relationships", tuple(self.relationships))

    def class_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.classes)

    def by_kind(self, kind: RelKind) -> tuple[Relationship, ...]:
        return tuple(r for r in self.relationships if r.kind is kind)

    def _key(self):
        return (
            self.id,
            self.classes,
            tuple(self.by_kind(k) for k in RelKind),
        )

    def __eq__(self, other):
        if not isinstance(other, ClassDiagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


def _find_cycle(edges: Iterable[tuple[str, str]]) -> list[str] | None:
    """Return one directed cycle as a node list, or None if the graph is a DAG."""
    adjacency: dict[str, list[str]] = {}
    for src, dst in edges:
        adjacency.setdefault(src, []).append(dst)

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {node: WHITE for node in adjacency}
    for node in adjacency:
        if color[node] != WHITE:
            continue
        stack = [(node, iter(adjacency.get(node, [])))]
        path = [node]
        color[node] = GRAY
        while stack:
            current, it = stack[-1]
            advanced = False
            for nxt in it:
                state = color.get(nxt, WHITE)
                if state == GRAY:
                    return path[path.index(nxt):]
                if state == WHITE:
                    color[nxt] = GRAY
                    path.append(nxt)
                    stack.append((nxt, iter(adjacency.get(nxt, []))))
                    advanced = True
                    break
            if not advanced:
                color[current] = BLACK
                path.pop()
                stack.pop()
    return None


def validate(diagram: ClassDiagram) -> ClassDiagram:
    """Check every diagram invariant and return the diagram unchanged.

    Raises DuplicateClass, UnknownEndpoint, DuplicateHierarchyEdge,
    GeneralizationCycle, or AggregationCycle on the first violation found.
    Never mutates or reorders anything; validating a valid diagram is a
    no-op, so the operation is idempotent.
    """
    seen: set[str] = set()
    for cls in diagram.classes:
        if cls.name in seen:
            raise DuplicateClass(cls.name)
        seen.add(cls.name)

    for rel in diagram.relationships:
        for endpoint in (rel.source, rel.target):
            if endpoint not in seen:
                raise UnknownEndpoint(rel, endpoint)

    for kind, cycle_error in (
        (RelKind.GENERALIZATION, GeneralizationCycle),
        (RelKind.AGGREGATION, AggregationCycle),
    ):
        edges = [(r.source, r.target) for r in diagram.by_kind(kind)]
        pairs: set[tuple[str, str]] = set()
        for pair in edges:
            if pair in pairs:
                raise DuplicateHierarchyEdge(kind, pair)
            pairs.add(pair)
        cycle = _find_cycle(edges)
        if cycle is not None:
            raise cycle_error(cycle)

    return diagram
