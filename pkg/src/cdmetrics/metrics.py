"""The eleven class-diagram design metrics.

All metrics are non-negative integer counts over a validated diagram:
size counts (NC, NA, NM), per-kind relationship counts (NAssoc, NAgg,
NDep, NGen), hierarchy counts (NAggH, NGenH), and the two longest-path
depths (MaxHAgg, MaxDIT).
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import lru_cache

from .diagram import ClassDiagram, RelKind
from .errors import UnknownClass

METRIC_NAMES = (
    "NC",
    "NA",
    "NM",
    "NAssoc",
    "NAgg",
    "NDep",
    "NGen",
    "NAggH",
    "NGenH",
    "MaxHAgg",
    "MaxDIT",
)


@dataclass(frozen=True)
class MetricsVector:
    NC: int = 0
    NA: int = 0
    NM: int = 0
    NAssoc: int = 0
    NAgg: int = 0
    NDep: int = 0
    NGen: int = 0
    NAggH: int = 0
    NGenH: int = 0
    MaxHAgg: int = 0
    MaxDIT: int = 0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{f.name} must be a non-negative integer, got {value!r}")

    def as_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in METRIC_NAMES}

    def __getitem__(self, name: str) -> int:
        if name not in METRIC_NAMES:
            raise KeyError(name)
        return getattr(self, name)


def _edges(diagram: ClassDiagram, kind: RelKind) -> list[tuple[str, str]]:
    return [(r.source, r.target) for r in diagram.by_kind(kind)]


def _longest_path_from(start: str, adjacency: dict[str, list[str]]) -> int:
    """Longest directed path length (in edges) from start, over an acyclic graph."""

    @lru_cache(maxsize=None)
    def depth(node: str) -> int:
        successors = adjacency.get(node, [])
        if not successors:
            return 0
        return 1 + max(depth(s) for s in successors)

    return depth(start)


def _depth_metric(diagram: ClassDiagram, cls: str, kind: RelKind) -> int:
    if cls not in diagram.class_names():
        raise UnknownClass(cls)
    adjacency: dict[str, list[str]] = {}
    for src, dst in _edges(diagram, kind):
        adjacency.setdefault(src, []).append(dst)
    return _longest_path_from(cls, adjacency)


def dit(diagram: ClassDiagram, cls: str) -> int:
    """Longest child-to-parent generalization path from cls to a parentless root."""
    return _depth_metric(diagram, cls, RelKind.GENERALIZATION)


def hagg(diagram: ClassDiagram, cls: str) -> int:
    """Longest whole-to-part aggregation path from cls to a part-less leaf."""
    return _depth_metric(diagram, cls, RelKind.AGGREGATION)


def count_hierarchies(diagram: ClassDiagram, kind: RelKind) -> int:
    """Number of weakly connected components with at least one edge of the kind."""
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    edges = _edges(diagram, kind)
    for src, dst in edges:
        for node in (src, dst):
            parent.setdefault(node, node)
        parent[find(src)] = find(dst)

    return len({find(node) for node in parent})


def compute_metrics(diagram: ClassDiagram) -> MetricsVector:
    """All eleven metrics for a validated (acyclic-hierarchy) diagram."""
    names = diagram.class_names()
    max_dit = max((dit(diagram, c) for c in names), default=0)
    max_hagg = max((hagg(diagram, c) for c in names), default=0)
    return MetricsVector(
        NC=len(names),
        NA=sum(len(c.attributes) for c in diagram.classes),
        NM=sum(len(c.methods) for c in diagram.classes),
        NAssoc=len(diagram.by_kind(RelKind.ASSOCIATION)),
        NAgg=len(diagram.by_kind(RelKind.AGGREGATION)),
        NDep=len(diagram.by_kind(RelKind.DEPENDENCY)),
        NGen=len(diagram.by_kind(RelKind.GENERALIZATION)),
        NAggH=count_hierarchies(diagram, RelKind.AGGREGATION),
        NGenH=count_hierarchies(diagram, RelKind.GENERALIZATION),
        MaxHAgg=max_hagg,
        MaxDIT=max_dit,
    )
