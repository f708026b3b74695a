"""Delimiter-separated corpus files for fitting and validation."""

from __future__ import annotations

import csv
import io
from importlib import resources
from pathlib import Path

from .errors import CdmetricsError
from .regression import RatedSample
from .spearman import RatedPair

REFERENCE_RATINGS_RESOURCE = "table2.csv"
# r_s the original study reports for the reference ratings, for comparison.
REPORTED_RANK_CORRELATION = 0.9482


class CorpusError(CdmetricsError):
    """Malformed corpus file."""


def _read_rows(text: str, where: str) -> tuple[list[str], list[dict[str, str]]]:
    sample = text[:4096]
    try:
        dialect = csv.Sniffer().sniff(sample, delimiters=",;\t")
    except csv.Error:
        dialect = csv.excel
    reader = csv.DictReader(io.StringIO(text), dialect=dialect)
    if not reader.fieldnames:
        raise CorpusError(f"{where}: empty corpus")
    fieldnames = [name.strip() for name in reader.fieldnames]
    rows = []
    for row in reader:
        rows.append({
            (k.strip() if k else k): (v.strip() if v else v)
            for k, v in row.items()
        })
    return fieldnames, rows


def _number(row: dict, column: str, where: str) -> float:
    try:
        return float(row[column])
    except (KeyError, TypeError, ValueError):
        raise CorpusError(
            f"{where}: bad numeric value for column {column!r}: {row.get(column)!r}"
        ) from None


def load_rating_corpus(path: str | Path) -> list[RatedSample]:
    """Fit corpus: predictor columns plus a final `rating` column."""
    where = str(path)
    fieldnames, rows = _read_rows(Path(path).read_text(encoding="utf-8"), where)
    if "rating" not in fieldnames:
        raise CorpusError(f"{where}: missing 'rating' column")
    predictors = [name for name in fieldnames if name != "rating"]
    samples = []
    for row in rows:
        samples.append(RatedSample(
            predictors={p: _number(row, p, where) for p in predictors},
            rating=_number(row, "rating", where),
        ))
    return samples


def parse_validation_rows(text: str, where: str) -> list[dict[str, str]]:
    """Validation corpus rows: id plus known, and computed or a diagram column."""
    fieldnames, rows = _read_rows(text, where)
    if "known" not in fieldnames:
        raise CorpusError(f"{where}: missing 'known' column")
    if "computed" not in fieldnames and "diagram" not in fieldnames:
        raise CorpusError(f"{where}: need a 'computed' or 'diagram' column")
    return rows


def pair_from_row(row: dict[str, str], computed: float, where: str) -> RatedPair:
    return RatedPair(known=_number(row, "known", where), computed=computed)


def load_reference_ratings() -> list[RatedPair]:
    """The bundled 28-diagram known/computed rating pairs."""
    text = (
        resources.files("cdmetrics") / "data" / REFERENCE_RATINGS_RESOURCE
    ).read_text(encoding="utf-8")
    rows = parse_validation_rows(text, REFERENCE_RATINGS_RESOURCE)
    return [
        pair_from_row(row, _number(row, "computed", REFERENCE_RATINGS_RESOURCE),
                      REFERENCE_RATINGS_RESOURCE)
        for row in rows
    ]
