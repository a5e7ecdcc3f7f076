"""Additive-weighting pipeline over crisp decision matrices.

The stages, in order: assemble a crisp matrix from fuzzified applicant
attributes, normalize each column against its best value (max for benefit
criteria, min for cost criteria), take the weighted sum per row, rank the
rows under a deterministic total order, and cut the ranking at the quota.

All functions are pure: they never mutate their inputs and identical inputs
give identical outputs, including tie cases.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .fuzzy import CriterionSpec, OutOfDomain, fuzzify

#: Two scores closer than this count as a tie for ranking purposes.
SCORE_TIE_TOLERANCE = 1e-12

#: Weight vectors must sum to 1 within this absolute tolerance.
WEIGHT_SUM_TOLERANCE = 1e-9


class DimensionMismatch(ValueError):
    """Weight vector or criteria list does not match the matrix shape."""


class DegenerateColumn(ValueError):
    """A column cannot be normalized (non-positive max or cell)."""


@dataclass(frozen=True)
class DecisionMatrix:
    """Crisp scores, one row per alternative and one column per criterion."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.alternatives):
            raise ValueError(
                f"{len(self.alternatives)} alternatives but {len(self.rows)} rows"
            )
        if len(set(self.alternatives)) != len(self.alternatives):
            raise ValueError("alternative ids are not unique")
        for alt, row in zip(self.alternatives, self.rows):
            if len(row) != len(self.criteria):
                raise ValueError(
                    f"row {alt} has {len(row)} cells, expected {len(self.criteria)}"
                )
            for value in row:
                if not math.isfinite(value):
                    raise ValueError(f"row {alt} contains non-finite value {value!r}")

    def column(self, j: int) -> tuple[float, ...]:
        return tuple(row[j] for row in self.rows)


@dataclass(frozen=True)
class NormalizedMatrix:
    """Per-column ratings in (0, 1]; same shape as the source matrix."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class RankedAlternative:
    alternative: str
    score: float
    rank: int


@dataclass(frozen=True)
class Ranking:
    """Alternatives in deterministic best-first order.

    ``tie_break_applied[k]`` is True when entries k and k+1 have scores equal
    within :data:`SCORE_TIE_TOLERANCE`, i.e. their relative order came from
    the tie rule rather than the scores.
    """

    entries: tuple[RankedAlternative, ...]
    tie_break_applied: tuple[bool, ...]


def build_matrix(
    applicants: Sequence[tuple[str, Mapping[str, float]]],
    criteria: Sequence[CriterionSpec],
) -> DecisionMatrix:
    """Fuzzify raw attribute records into a crisp decision matrix.

    ``applicants`` holds ``(alternative_id, {criterion_id: raw_value})``
    pairs; row order is preserved. An out-of-domain raw value aborts the
    build with the offending alternative and criterion attached.
    """
    ids = []
    rows = []
    for alt_id, values in applicants:
        row = []
        for criterion in criteria:
            if criterion.id not in values:
                raise ValueError(
                    f"applicant {alt_id} has no raw value for criterion {criterion.id}"
                )
            try:
                row.append(fuzzify(criterion, values[criterion.id]))
            except OutOfDomain as exc:
                raise OutOfDomain(
                    exc.value, criterion=criterion.id, alternative=alt_id
                ) from None
        ids.append(alt_id)
        rows.append(tuple(row))
    return DecisionMatrix(
        alternatives=tuple(ids),
        criteria=tuple(c.id for c in criteria),
        rows=tuple(rows),
    )


def normalize(
    matrix: DecisionMatrix, criteria: Sequence[CriterionSpec]
) -> NormalizedMatrix:
    """Scale each column against its best value.

    Benefit columns divide by the column max (best row gets 1); cost columns
    divide the column min by each cell (cheapest row gets 1). All cells must
    be positive, otherwise the column is degenerate.
    """
    if not matrix.rows:
        raise ValueError("cannot normalize an empty matrix")
    if tuple(c.id for c in criteria) != matrix.criteria:
        raise DimensionMismatch(
            f"criteria {tuple(c.id for c in criteria)} do not match "
            f"matrix columns {matrix.criteria}"
        )

    best = []
    for j, criterion in enumerate(criteria):
        column = matrix.column(j)
        if criterion.kind == "benefit":
            top = max(column)
            if top <= 0:
                raise DegenerateColumn(
                    f"benefit column {criterion.id} has non-positive max {top!r}"
                )
            best.append(top)
        else:
            low = min(column)
            if low <= 0:
                raise DegenerateColumn(
                    f"cost column {criterion.id} has non-positive cell {low!r}"
                )
            best.append(low)

    rows = []
    for row in matrix.rows:
        normed = []
        for j, criterion in enumerate(criteria):
            if criterion.kind == "benefit":
                normed.append(row[j] / best[j])
            else:
                normed.append(best[j] / row[j])
        rows.append(tuple(normed))

    return NormalizedMatrix(matrix.alternatives, matrix.criteria, tuple(rows))


def weighted_sum(
    normalized: NormalizedMatrix, weights: Sequence[float]
) -> tuple[float, ...]:
    """Score each alternative as the weighted sum of its normalized ratings."""
    if len(weights) != len(normalized.criteria):
        raise DimensionMismatch(
            f"{len(weights)} weights for {len(normalized.criteria)} criteria"
        )
    scores = []
    for row in normalized.rows:
        total = 0.0
        for w, r in zip(weights, row):
            total += w * r
        scores.append(total)
    return tuple(scores)


def rank(
    scores: Sequence[float],
    alternatives: Sequence[str],
    tie_scores: Sequence[float] | None = None,
) -> Ranking:
    """Total order: score descending, then ``tie_scores`` descending, then id.

    ``tie_scores`` normally holds each alternative's crisp score on the first
    (highest-weighted) criterion; when omitted, ties fall through to the
    ascending-id rule directly.
    """
    if len(scores) != len(alternatives):
        raise DimensionMismatch(
            f"{len(scores)} scores for {len(alternatives)} alternatives"
        )
    for v in scores:
        if not math.isfinite(v):
            raise ValueError(f"non-finite score {v!r}")
    breakers = tuple(tie_scores) if tie_scores is not None else (0.0,) * len(scores)
    if len(breakers) != len(scores):
        raise DimensionMismatch(
            f"{len(breakers)} tie-break scores for {len(scores)} alternatives"
        )

    order = sorted(
        range(len(scores)),
        key=lambda i: (-scores[i], -breakers[i], alternatives[i]),
    )
    entries = tuple(
        RankedAlternative(alternatives[i], scores[i], position + 1)
        for position, i in enumerate(order)
    )
    ties = tuple(
        abs(entries[k].score - entries[k + 1].score) <= SCORE_TIE_TOLERANCE
        for k in range(len(entries) - 1)
    )
    return Ranking(entries=entries, tie_break_applied=ties)


def select(ranking: Ranking, quota: int | None) -> tuple[RankedAlternative, ...]:
    """First ``quota`` entries of the ranking; ``None`` selects everyone."""
    if quota is None:
        return ranking.entries
    if quota < 0:
        raise ValueError(f"quota must be non-negative, got {quota}")
    return ranking.entries[: min(quota, len(ranking.entries))]


def validate_weights(weights: Sequence[float]) -> list[str]:
    """Report every violation of the weight-vector invariants.

    Weights must all be finite and non-negative and sum to 1 within
    :data:`WEIGHT_SUM_TOLERANCE`. An empty report means the vector is valid.
    """
    problems: list[str] = []
    if not weights:
        problems.append("weight vector is empty")
        return problems
    for j, w in enumerate(weights):
        if not math.isfinite(w):
            problems.append(f"weight {j + 1} is not finite ({w!r})")
        elif w < 0:
            problems.append(f"weight {j + 1} is negative ({w:g})")
    total = math.fsum(weights)
    if math.isfinite(total) and abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
        problems.append(f"weights sum to {total:.12g}, expected 1")
    return problems
