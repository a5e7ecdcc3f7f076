"""End-to-end selection: applicant pool in, immutable run snapshot out.

Applicants whose raw value falls outside a conversion table are not scored;
they are carried in the run as ineligible, with the offending criterion and
reason. Everyone else flows through fuzzification, normalization, weighted
scoring, ranking and the quota cut.
"""

from __future__ import annotations

from collections.abc import Sequence

from .applicants import ApplicantRecord
from .fuzzy import CriterionSpec, OutOfDomain, fuzzify
from .saw import DecisionMatrix, normalize, rank, select, weighted_sum
from .store import IneligibleRow, PoolApplicant, RecipientRow, SelectionRun


class NoEligibleApplicants(Exception):
    """Every applicant in the pool was ineligible."""

    def __init__(self, ineligible: tuple[IneligibleRow, ...]) -> None:
        self.ineligible = ineligible
        super().__init__(f"no eligible applicants ({len(ineligible)} ineligible)")


def pool_from_records(
    records: Sequence[ApplicantRecord], criteria: Sequence[CriterionSpec]
) -> tuple[PoolApplicant, ...]:
    """Snapshot applicant records as raw values keyed by criterion id."""
    pool = []
    for record in records:
        attributes = record.raw_values()
        raw = {}
        for criterion in criteria:
            if criterion.attribute not in attributes:
                raise ValueError(
                    f"criterion {criterion.id} reads attribute "
                    f"{criterion.attribute!r}, which applicants do not carry"
                )
            raw[criterion.id] = attributes[criterion.attribute]
        pool.append(PoolApplicant(nim=record.nim, name=record.name, raw=raw))
    return tuple(pool)


def execute_selection(
    records: Sequence[ApplicantRecord],
    criteria: Sequence[CriterionSpec],
    weights: Sequence[float],
    quota: int | None,
    *,
    period_year: int | None = None,
    period_kind: str | None = None,
    timestamp: str | None = None,
) -> SelectionRun:
    """Run the full pipeline over a pool and freeze the result.

    Raises :class:`NoEligibleApplicants` when nobody can be scored; input
    validation (weights, criteria) is the caller's responsibility.
    """
    pool = pool_from_records(records, criteria)

    eligible: list[PoolApplicant] = []
    rows: list[tuple[int, ...]] = []
    ineligible: list[IneligibleRow] = []
    for applicant in pool:
        try:
            row = tuple(fuzzify(c, applicant.raw[c.id]) for c in criteria)
        except OutOfDomain as exc:
            ineligible.append(
                IneligibleRow(nim=applicant.nim, criterion=exc.criterion or "", reason=str(exc))
            )
            continue
        eligible.append(applicant)
        rows.append(row)

    if not eligible:
        raise NoEligibleApplicants(tuple(ineligible))

    matrix = DecisionMatrix(
        alternatives=tuple(a.nim for a in eligible),
        criteria=tuple(c.id for c in criteria),
        rows=tuple(rows),
    )
    normalized = normalize(matrix, criteria)
    scores = weighted_sum(normalized, weights)
    ranking = rank(scores, matrix.alternatives, tie_scores=matrix.column(0))

    names = {a.nim: a.name for a in pool}
    recipients = tuple(
        RecipientRow(nim=e.alternative, name=names[e.alternative], score=e.score, rank=e.rank)
        for e in select(ranking, quota)
    )

    return SelectionRun(
        period_year=period_year,
        period_kind=period_kind,
        run_id=None,
        timestamp=timestamp,
        criteria=tuple(criteria),
        weights=tuple(weights),
        quota=quota,
        pool=pool,
        matrix=matrix,
        normalized=normalized,
        scores=scores,
        ranking=ranking,
        recipients=recipients,
        ineligible=tuple(ineligible),
    )
