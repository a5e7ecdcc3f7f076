"""Criteria configuration: JSON parsing, validation and the bundled default.

A configuration document is an ordered list of criteria, each with an id,
display name, benefit/cost kind, weight and interval entries
``{lower, upper|null, crisp}``. The default shipped with the package encodes
the four scholarship criteria (exam score, parental income, number of
dependants, semester) with weights 0.40/0.30/0.10/0.20.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .fuzzy import ConversionTable, CriterionSpec, Interval, validate_table
from .saw import validate_weights

DEFAULT_CRITERIA_RESOURCE = "default_criteria.json"


class CriteriaConfigError(ValueError):
    """The configuration document is malformed."""


def _number(doc: dict, key: str, context: str) -> float:
    value = doc.get(key)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise CriteriaConfigError(f"{context}: {key!r} must be a number, got {value!r}")
    return value


def _parse_interval(doc: Any, context: str) -> Interval:
    if not isinstance(doc, dict):
        raise CriteriaConfigError(f"{context}: interval entries must be objects")
    lower = _number(doc, "lower", context)
    upper = doc.get("upper")
    if upper is not None and (not isinstance(upper, (int, float)) or isinstance(upper, bool)):
        raise CriteriaConfigError(f"{context}: 'upper' must be a number or null")
    crisp = doc.get("crisp")
    if not isinstance(crisp, int) or isinstance(crisp, bool):
        raise CriteriaConfigError(f"{context}: 'crisp' must be an integer")
    return Interval(lower=lower, upper=upper, crisp=crisp)


def _parse_criterion(doc: Any, position: int) -> CriterionSpec:
    context = f"criterion #{position + 1}"
    if not isinstance(doc, dict):
        raise CriteriaConfigError(f"{context}: must be an object")
    crit_id = doc.get("id")
    if not isinstance(crit_id, str) or not crit_id:
        raise CriteriaConfigError(f"{context}: 'id' must be a non-empty string")
    context = f"criterion {crit_id}"
    kind = doc.get("kind", "benefit")
    if kind not in ("benefit", "cost"):
        raise CriteriaConfigError(f"{context}: 'kind' must be 'benefit' or 'cost'")
    intervals = doc.get("intervals")
    if not isinstance(intervals, list) or not intervals:
        raise CriteriaConfigError(f"{context}: 'intervals' must be a non-empty list")
    entries = tuple(
        _parse_interval(entry, f"{context} interval #{k + 1}")
        for k, entry in enumerate(intervals)
    )
    domain = None
    if doc.get("domain") is not None:
        dom = doc["domain"]
        if not isinstance(dom, dict):
            raise CriteriaConfigError(f"{context}: 'domain' must be an object")
        dom_upper = dom.get("upper")
        if dom_upper is not None and not isinstance(dom_upper, (int, float)):
            raise CriteriaConfigError(f"{context}: domain 'upper' must be a number or null")
        domain = (_number(dom, "lower", f"{context} domain"), dom_upper)
    return CriterionSpec(
        id=crit_id,
        name=str(doc.get("name", crit_id)),
        kind=kind,
        table=ConversionTable(entries=entries, domain_unit=str(doc.get("domain_unit", ""))),
        weight=_number(doc, "weight", context),
        attribute=str(doc.get("attribute", "")),
        domain=domain,
    )


def parse_criteria(doc: Any) -> tuple[CriterionSpec, ...]:
    """Build criterion specs from a parsed JSON document.

    Accepts either a bare list of criteria or ``{"criteria": [...]}``.
    """
    if isinstance(doc, dict):
        doc = doc.get("criteria")
    if not isinstance(doc, list) or not doc:
        raise CriteriaConfigError("document must contain a non-empty 'criteria' list")
    return tuple(_parse_criterion(entry, k) for k, entry in enumerate(doc))


def criteria_to_doc(criteria: tuple[CriterionSpec, ...] | list[CriterionSpec]) -> dict:
    """Serialize criterion specs back to the configuration document shape."""
    out = []
    for c in criteria:
        entry: dict[str, Any] = {
            "id": c.id,
            "name": c.name,
            "kind": c.kind,
            "weight": c.weight,
            "attribute": c.attribute,
            "domain_unit": c.table.domain_unit,
            "intervals": [
                {"lower": iv.lower, "upper": iv.upper, "crisp": iv.crisp}
                for iv in c.table.entries
            ],
        }
        if c.domain is not None:
            entry["domain"] = {"lower": c.domain[0], "upper": c.domain[1]}
        out.append(entry)
    return {"criteria": out}


def load_criteria(path: str | Path) -> tuple[CriterionSpec, ...]:
    """Load and parse a criteria configuration file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CriteriaConfigError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CriteriaConfigError(f"{path} is not valid JSON: {exc}") from exc
    return parse_criteria(doc)


def load_default_criteria() -> tuple[CriterionSpec, ...]:
    """The bundled four-criterion configuration."""
    text = (
        resources.files("sawselect")
        .joinpath("data", DEFAULT_CRITERIA_RESOURCE)
        .read_text(encoding="utf-8")
    )
    return parse_criteria(json.loads(text))


def weights_of(criteria: tuple[CriterionSpec, ...] | list[CriterionSpec]) -> tuple[float, ...]:
    return tuple(c.weight for c in criteria)


def validate_criteria(criteria: tuple[CriterionSpec, ...] | list[CriterionSpec]) -> list[str]:
    """Report every defect of a criteria set: duplicate ids, table gaps or
    overlaps over each declared domain, and weight-vector violations."""
    problems: list[str] = []
    seen: set[str] = set()
    for c in criteria:
        if c.id in seen:
            problems.append(f"duplicate criterion id {c.id}")
        seen.add(c.id)
        for issue in validate_table(c.table, c.domain):
            problems.append(f"{c.id}: {issue.message}")
    problems.extend(validate_weights(weights_of(criteria)))
    return problems
