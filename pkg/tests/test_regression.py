import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdmetrics.errors import InsufficientSamples, ModelError, SingularDesign
from cdmetrics.metrics import METRIC_NAMES, MetricsVector
from cdmetrics.regression import (
    PUBLISHED_UNDERSTANDABILITY_MODEL,
    LinearModel,
    RatedSample,
    estimate,
    fit,
)

PUBLISHED = PUBLISHED_UNDERSTANDABILITY_MODEL


def test_published_model_constants():
    assert PUBLISHED.intercept == 1.33515
    assert PUBLISHED.coefficients == (
        ("NAssoc", 0.129), ("NA", 0.0463), ("MaxDIT", 0.3405),
    )


def test_estimate_intercept_only():
    assert estimate(PUBLISHED, MetricsVector()) == pytest.approx(1.33515, abs=1e-12)


def test_estimate_unit_metrics():
    vec = MetricsVector(NAssoc=1, NA=1, MaxDIT=1)
    assert estimate(PUBLISHED, vec) == pytest.approx(1.85095, abs=1e-9)


def test_estimate_larger_diagram():
    vec = MetricsVector(NAssoc=5, NA=20, MaxDIT=2)
    assert estimate(PUBLISHED, vec) == pytest.approx(3.58715, abs=1e-9)


def test_model_rejects_unknown_metric_and_nonfinite():
    with pytest.raises(ModelError):
        LinearModel(0.0, (("NotAMetric", 1.0),))
    with pytest.raises(ModelError):
        LinearModel(float("nan"), ())
    with pytest.raises(ModelError):
        LinearModel(0.0, (("NA", 1.0), ("NA", 2.0)))


def test_model_json_round_trip():
    obj = PUBLISHED.to_json_obj()
    assert obj == {
        "intercept": 1.33515,
        "coefficients": {"NAssoc": 0.129, "NA": 0.0463, "MaxDIT": 0.3405},
    }
    assert LinearModel.from_json_obj(obj) == PUBLISHED


def _samples(rows, predictors):
    return [
        RatedSample(dict(zip(predictors, row[:-1])), row[-1]) for row in rows
    ]


def test_fit_exact_line():
    model = fit(_samples([(0, 2), (1, 3), (2, 4)], ["NAssoc"]), ["NAssoc"])
    assert model.intercept == pytest.approx(2.0, abs=1e-9)
    assert dict(model.coefficients)["NAssoc"] == pytest.approx(1.0, abs=1e-9)


def test_fit_recovers_published_plane():
    predictors = ["NAssoc", "NA", "MaxDIT"]
    rows = [
        (0, 0, 0, 1.33515),
        (1, 0, 0, 1.46415),
        (0, 1, 0, 1.38145),
        (0, 0, 1, 1.67565),
    ]
    model = fit(_samples(rows, predictors), predictors)
    assert model.intercept == pytest.approx(1.33515, abs=1e-9)
    weights = dict(model.coefficients)
    assert weights["NAssoc"] == pytest.approx(0.129, abs=1e-9)
    assert weights["NA"] == pytest.approx(0.0463, abs=1e-9)
    assert weights["MaxDIT"] == pytest.approx(0.3405, abs=1e-9)


def test_fit_insufficient_samples():
    predictors = ["NAssoc", "NA", "MaxDIT"]
    rows = [(0, 0, 0, 1.0), (1, 0, 0, 2.0), (0, 1, 0, 3.0)]
    with pytest.raises(InsufficientSamples):
        fit(_samples(rows, predictors), predictors)


def test_fit_singular_design():
    predictors = ["NA", "NM"]
    rows = [(1, 1, 2.0), (2, 2, 3.0), (3, 3, 4.0), (4, 4, 5.0)]
    with pytest.raises(SingularDesign):
        fit(_samples(rows, predictors), predictors)


def _planted_case(seed):
    rng = random.Random(seed)
    p = rng.randint(1, 5)
    n = rng.randint(p + 1, 20)
    predictors = rng.sample(METRIC_NAMES, p)
    intercept = rng.uniform(-5, 5)
    weights = [rng.uniform(-3, 3) for _ in range(p)]
    rows = []
    for _ in range(n):
        x = [rng.uniform(-10, 10) for _ in range(p)]
        y = intercept + sum(w * v for w, v in zip(weights, x))
        rows.append((*x, y))
    return predictors, intercept, weights, rows


@settings(max_examples=60)
@given(st.integers(0, 10**9))
def test_planted_model_recovery(seed):
    predictors, intercept, weights, rows = _planted_case(seed)
    model = fit(_samples(rows, predictors), predictors)
    assert model.intercept == pytest.approx(intercept, abs=1e-8, rel=1e-8)
    fitted = dict(model.coefficients)
    for name, w in zip(predictors, weights):
        assert fitted[name] == pytest.approx(w, abs=1e-8, rel=1e-8)


@settings(max_examples=30)
@given(st.integers(0, 10**9))
def test_residual_orthogonality(seed):
    rng = random.Random(seed)
    predictors = ["NAssoc", "NA"]
    rows = [
        (rng.uniform(0, 10), rng.uniform(0, 10), rng.uniform(0, 6))
        for _ in range(10)
    ]
    samples = _samples(rows, predictors)
    model = fit(samples, predictors)
    residuals = [s.rating - estimate(model, s.predictors) for s in samples]
    scale = max(1.0, max(abs(s.rating) for s in samples))
    assert abs(sum(residuals)) <= 1e-8 * scale * len(samples)
    for p in predictors:
        dot = sum(r * s.predictors[p] for r, s in zip(residuals, samples))
        col_norm = math.sqrt(sum(s.predictors[p] ** 2 for s in samples))
        assert abs(dot) <= 1e-8 * max(1.0, col_norm * scale)


@settings(max_examples=30)
@given(st.integers(0, 10**9))
def test_prediction_invariant_under_predictor_reordering(seed):
    predictors, _, _, rows = _planted_case(seed)
    if len(predictors) < 2:
        return
    samples = _samples(rows, predictors)
    rng = random.Random(seed + 1)
    shuffled = predictors[:]
    rng.shuffle(shuffled)
    a = fit(samples, predictors)
    b = fit(samples, shuffled)
    for s in samples:
        assert estimate(a, s.predictors) == pytest.approx(
            estimate(b, s.predictors), abs=1e-7, rel=1e-7
        )


def test_estimate_is_affine():
    v1 = {"NAssoc": 2.0, "NA": 7.0, "MaxDIT": 1.0}
    v2 = {"NAssoc": 5.0, "NA": 1.0, "MaxDIT": 4.0}
    for alpha in (0.0, 0.25, 0.5, 1.0):
        blended = {
            k: alpha * v1[k] + (1 - alpha) * v2[k] for k in v1
        }
        expected = alpha * estimate(PUBLISHED, v1) + (1 - alpha) * estimate(PUBLISHED, v2)
        assert estimate(PUBLISHED, blended) == pytest.approx(expected, abs=1e-12)
