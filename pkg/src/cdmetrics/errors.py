"""Exception types raised across the package."""

from __future__ import annotations


class CdmetricsError(Exception):
    """Base class for all errors raised by this package."""


class DiagramError(CdmetricsError):
    """A structural problem in a class diagram."""


class DuplicateClass(DiagramError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"class {name!r} declared more than once")


class UnknownEndpoint(DiagramError):
    def __init__(self, relationship, name: str):
        self.relationship = relationship
        self.name = name
        super().__init__(
            f"{relationship.kind.value} relationship references undeclared class {name!r}"
        )


class UnknownClass(DiagramError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no class named {name!r} in diagram")


class HierarchyCycle(DiagramError):
    """A directed cycle in the generalization or aggregation subgraph."""

    def __init__(self, cycle: list[str]):
        self.cycle = list(cycle)
        path = " -> ".join(self.cycle + [self.cycle[0]])
        super().__init__(f"{self.label}: {path}")

    label = "cycle"


class GeneralizationCycle(HierarchyCycle):
    label = "generalization cycle"


class AggregationCycle(HierarchyCycle):
    label = "aggregation cycle"


class DuplicateHierarchyEdge(DiagramError):
    def __init__(self, kind, pair: tuple[str, str]):
        self.kind = kind
        self.pair = pair
        super().__init__(f"duplicate {kind.value} edge {pair[0]} -> {pair[1]}")


class DslSyntaxError(CdmetricsError):
    """Malformed DSL source; carries a 1-based line/column span."""

    def __init__(self, span, message: str):
        self.span = span
        super().__init__(f"{span.line}:{span.column}: {message}")


class ModelError(CdmetricsError):
    """A problem with a linear model or its fitting inputs."""


class InsufficientSamples(ModelError):
    def __init__(self, needed: int, got: int):
        self.needed = needed
        self.got = got
        super().__init__(f"need at least {needed} samples, got {got}")


class SingularDesign(ModelError):
    def __init__(self, detail: str = "design columns are linearly dependent"):
        super().__init__(detail)


class ValidationInputError(CdmetricsError):
    """Bad input to the rank-correlation routines."""


class EmptyInput(ValidationInputError):
    def __init__(self):
        super().__init__("cannot rank an empty list")


class TooFewPairs(ValidationInputError):
    def __init__(self, n: int, minimum: int = 2):
        self.n = n
        super().__init__(f"need at least {minimum} pairs, got {n}")


class InvalidAlpha(ValidationInputError):
    def __init__(self, alpha: float):
        self.alpha = alpha
        super().__init__(f"alpha must be in (0, 0.5], got {alpha}")
