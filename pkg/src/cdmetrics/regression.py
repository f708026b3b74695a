"""Linear quality models: application and ordinary-least-squares fitting.

The published understandability model predicts an expert rating from three
diagram metrics::

    understandability = 1.33515 + 0.129*NAssoc + 0.0463*NA + 0.3405*MaxDIT

New models over any subset of the eleven metrics are fitted via the normal
equations with a partially pivoted direct solve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InsufficientSamples, ModelError, SingularDesign
from .metrics import METRIC_NAMES, MetricsVector

PIVOT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class LinearModel:
    """Intercept plus named metric coefficients, all in rating units."""

    intercept: float
    coefficients: tuple[tuple[str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(
            (name, float(weight)) for name, weight in self.coefficients
        ))
        object.__setattr__(self, "intercept", float(self.intercept))
        names = [name for name, _ in self.coefficients]
        if len(set(names)) != len(names):
            raise ModelError("duplicate metric name in coefficients")
        unknown = set(names) - set(METRIC_NAMES)
        if unknown:
            raise ModelError(f"unknown metric name(s): {sorted(unknown)}")
        for value in (self.intercept, *(w for _, w in self.coefficients)):
            if not math.isfinite(value):
                raise ModelError("model weights must be finite")

    def predictors(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.coefficients)

    def to_json_obj(self) -> dict:
        return {
            "intercept": self.intercept,
            "coefficients": {name: weight for name, weight in self.coefficients},
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LinearModel":
        try:
            intercept = float(obj["intercept"])
            coefficients = tuple(
                (str(name), float(weight))
                for name, weight in obj["coefficients"].items()
            )
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ModelError(f"malformed model object: {exc}") from exc
        return cls(intercept, coefficients)


PUBLISHED_UNDERSTANDABILITY_MODEL = LinearModel(
    intercept=1.33515,
    coefficients=(("NAssoc", 0.129), ("NA", 0.0463), ("MaxDIT", 0.3405)),
)


@dataclass(frozen=True)
class RatedSample:
    """Predictor values for one diagram paired with its expert rating."""

    predictors: Mapping[str, float]
    rating: float

    def __post_init__(self):
        object.__setattr__(self, "predictors", dict(self.predictors))
        object.__setattr__(self, "rating", float(self.rating))
        if not math.isfinite(self.rating):
            raise ModelError("rating must be finite")
        unknown = set(self.predictors) - set(METRIC_NAMES)
        if unknown:
            raise ModelError(f"unknown metric name(s): {sorted(unknown)}")


def estimate(model: LinearModel, metrics: MetricsVector | Mapping[str, float]) -> float:
    """intercept + sum of weight * metric value; no clamping or rounding."""
    return model.intercept + sum(
        weight * float(metrics[name]) for name, weight in model.coefficients
    )


def _solve_pivoted(matrix: list[list[float]], rhs: list[float]) -> list[float]:
    """Gaussian elimination with partial pivoting; raises SingularDesign."""
    n = len(rhs)
    a = [row[:] + [r] for row, r in zip(matrix, rhs)]
    scale = max((abs(v) for row in matrix for v in row), default=0.0) or 1.0
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[pivot_row][col]) <= PIVOT_TOLERANCE * scale:
            raise SingularDesign()
        a[col], a[pivot_row] = a[pivot_row], a[col]
        for row in range(col + 1, n):
            factor = a[row][col] / a[col][col]
            for k in range(col, n + 1):
                a[row][k] -= factor * a[col][k]
    solution = [0.0] * n
    for row in range(n - 1, -1, -1):
        solution[row] = (
            a[row][n] - sum(a[row][k] * solution[k] for k in range(row + 1, n))
        ) / a[row][row]
    return solution


def fit(samples: Sequence[RatedSample], predictors: Sequence[str]) -> LinearModel:
    """Ordinary least squares over the requested predictors plus an intercept.

    Needs at least len(predictors) + 1 samples and a full-rank design;
    otherwise raises InsufficientSamples or SingularDesign.
    """
    predictors = list(predictors)
    needed = len(predictors) + 1
    if len(samples) < needed:
        raise InsufficientSamples(needed, len(samples))
    for sample in samples:
        missing = set(predictors) - set(sample.predictors)
        if missing:
            raise ModelError(f"sample missing predictor(s): {sorted(missing)}")

    design = [
        [1.0] + [float(s.predictors[p]) for p in predictors] for s in samples
    ]
    ratings = [s.rating for s in samples]
    p = len(predictors) + 1
    normal = [
        [sum(row[i] * row[j] for row in design) for j in range(p)]
        for i in range(p)
    ]
    moments = [
        sum(row[i] * y for row, y in zip(design, ratings)) for i in range(p)
    ]
    solution = _solve_pivoted(normal, moments)
    return LinearModel(
        intercept=solution[0],
        coefficients=tuple(zip(predictors, solution[1:])),
    )
