"""Five-level fuzzy scale and the interval tables that map raw attributes onto it.

Every selection criterion carries a conversion table: an ordered list of
half-open intervals ``[lower, upper)``, each assigning one crisp score from
the scale. An ``upper`` of ``None`` extends the interval to +infinity. A raw
value covered by no interval is *out of domain*, which the selection pipeline
treats as "ineligible on this criterion" rather than as a score of zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Literal


class FuzzyLevel(enum.IntEnum):
    """Linguistic levels of the scale; the member value is the crisp score."""

    SR = 2   # sangat rendah (very low)
    R = 4    # rendah (low)
    CT = 6   # cukup tinggi (fairly high)
    T = 8    # tinggi (high)
    ST = 10  # sangat tinggi (very high)


#: Legal crisp scores, in scale order.
CRISP_VALUES: tuple[int, ...] = tuple(level.value for level in FuzzyLevel)


class OutOfDomain(ValueError):
    """A raw value falls in no interval of its conversion table."""

    def __init__(
        self,
        value: float,
        criterion: str | None = None,
        alternative: str | None = None,
    ) -> None:
        self.value = value
        self.criterion = criterion
        self.alternative = alternative
        msg = f"value {value!r} is outside the conversion table"
        if criterion is not None:
            msg += f" of criterion {criterion}"
        if alternative is not None:
            msg += f" (alternative {alternative})"
        super().__init__(msg)


@dataclass(frozen=True)
class Interval:
    """Half-open interval ``[lower, upper)`` mapping to one crisp score.

    ``upper is None`` means the interval is unbounded above.
    """

    lower: float
    upper: float | None
    crisp: int

    def contains(self, raw: float) -> bool:
        return self.lower <= raw and (self.upper is None or raw < self.upper)


@dataclass(frozen=True)
class ConversionTable:
    entries: tuple[Interval, ...]
    domain_unit: str = ""

    def convert(self, raw: float) -> int:
        """Crisp score of ``raw``; raises :class:`OutOfDomain` on a miss."""
        for entry in self.entries:
            if entry.contains(raw):
                return entry.crisp
        raise OutOfDomain(raw)


@dataclass(frozen=True)
class CriterionSpec:
    """One criterion: conversion table, benefit/cost direction and weight.

    ``attribute`` names the applicant field that feeds this criterion (e.g.
    ``"penghasilan"``); ``domain`` is the declared admissible raw range the
    table must cover, ``(lower, upper)`` with ``upper=None`` for unbounded.
    """

    id: str
    name: str
    kind: Literal["benefit", "cost"]
    table: ConversionTable
    weight: float
    attribute: str = ""
    domain: tuple[float, float | None] | None = None


def fuzzify(criterion: CriterionSpec, raw: float) -> int:
    """Crisp score of ``raw`` under the criterion's conversion table."""
    try:
        return criterion.table.convert(raw)
    except OutOfDomain:
        raise OutOfDomain(raw, criterion=criterion.id) from None


@dataclass(frozen=True)
class TableIssue:
    """One defect found while validating a conversion table.

    ``lower``/``upper`` bound the offending region where that makes sense
    (gaps and overlaps); ``upper=None`` means unbounded above.
    """

    kind: Literal["overlap", "gap", "illegal_crisp", "unordered", "invalid_interval"]
    lower: float | None
    upper: float | None
    message: str


def _span(lo: float | None, hi: float | None) -> str:
    hi_txt = "inf" if hi is None else f"{hi:g}"
    lo_txt = "-inf" if lo is None else f"{lo:g}"
    return f"[{lo_txt}, {hi_txt})"


def validate_table(
    table: ConversionTable,
    domain: tuple[float, float | None] | None = None,
) -> list[TableIssue]:
    """Report every gap, overlap or illegal crisp value of ``table``.

    ``domain`` is the admissible raw range the table must cover; when omitted
    only internal consistency (ordering, disjointness, crisp legality) is
    checked. An empty report means the table invariants hold.
    """
    issues: list[TableIssue] = []

    for entry in table.entries:
        if entry.crisp not in CRISP_VALUES:
            issues.append(
                TableIssue(
                    "illegal_crisp",
                    entry.lower,
                    entry.upper,
                    f"crisp value {entry.crisp} at {_span(entry.lower, entry.upper)} "
                    f"is not one of {CRISP_VALUES}",
                )
            )
        if entry.upper is not None and entry.upper <= entry.lower:
            issues.append(
                TableIssue(
                    "invalid_interval",
                    entry.lower,
                    entry.upper,
                    f"interval {_span(entry.lower, entry.upper)} is empty or reversed",
                )
            )

    ordered = sorted(table.entries, key=lambda e: e.lower)
    if list(table.entries) != ordered:
        issues.append(
            TableIssue("unordered", None, None, "entries are not sorted by lower bound")
        )

    # Sweep the sorted entries tracking the covered high-watermark.
    covered: float | None = None
    for entry in ordered:
        entry_hi = math.inf if entry.upper is None else entry.upper
        if covered is not None:
            if entry.lower < covered:
                seg_hi = min(covered, entry_hi)
                issues.append(
                    TableIssue(
                        "overlap",
                        entry.lower,
                        None if seg_hi == math.inf else seg_hi,
                        f"intervals overlap at {_span(entry.lower, None if seg_hi == math.inf else seg_hi)}",
                    )
                )
            elif entry.lower > covered:
                issues.append(
                    TableIssue(
                        "gap",
                        covered,
                        entry.lower,
                        f"no interval covers {_span(covered, entry.lower)}",
                    )
                )
        covered = entry_hi if covered is None else max(covered, entry_hi)

    if domain is not None:
        dom_lo, dom_hi = domain
        if not ordered:
            issues.append(
                TableIssue("gap", dom_lo, dom_hi, f"no interval covers {_span(dom_lo, dom_hi)}")
            )
        else:
            if ordered[0].lower > dom_lo:
                issues.append(
                    TableIssue(
                        "gap",
                        dom_lo,
                        ordered[0].lower,
                        f"no interval covers {_span(dom_lo, ordered[0].lower)}",
                    )
                )
            top = covered if covered is not None else -math.inf
            dom_top = math.inf if dom_hi is None else dom_hi
            if top < dom_top:
                issues.append(
                    TableIssue(
                        "gap",
                        None if top == -math.inf else top,
                        dom_hi,
                        f"no interval covers {_span(top, dom_hi)}",
                    )
                )

    return issues
