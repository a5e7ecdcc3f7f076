"""File-backed registry of selection periods, applicant pools and run history.

Layout under the data root, one directory per period:

    <root>/periods/<year>-<kind-slug>/period.json
    <root>/periods/<year>-<kind-slug>/runs/<run-id>.json

Documents are wrapped in an envelope ``{schema, checksum, payload}`` whose
checksum is the SHA-256 of the canonical payload JSON; a mismatch (or a
truncated file) surfaces as :class:`StorageCorrupt` instead of silently
loading bad data. Run files are append-only: re-running a period writes a
new file and the period document's run list decides which one is latest.

Writes to one period are serialized through a per-period lock; reads are
lock-free because every write lands via an atomic rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

from .applicants import ApplicantRecord
from .criteria import criteria_to_doc, parse_criteria
from .fuzzy import CriterionSpec
from .saw import DecisionMatrix, NormalizedMatrix, RankedAlternative, Ranking

PERIOD_SCHEMA = "sawselect.period/1"
RUN_SCHEMA = "sawselect.run/1"

PERIOD_STATUSES = ("open", "selected", "closed")
_ALLOWED_TRANSITIONS = {("open", "selected"), ("selected", "closed")}

_UNSET = object()


class StoreError(Exception):
    """Base class for registry failures."""


class UnknownPeriod(StoreError):
    pass


class AmbiguousPeriod(StoreError):
    """More than one period matches the year; a kind is required."""


class PeriodExists(StoreError):
    pass


class PeriodNotOpen(StoreError):
    pass


class DuplicateApplicant(StoreError):
    pass


class UnknownRun(StoreError):
    pass


class NoRunYet(StoreError):
    pass


class StorageCorrupt(StoreError):
    pass


class InvalidTransition(StoreError):
    pass


@dataclass(frozen=True)
class SelectionPeriod:
    year: int
    kind: str
    quota: int | None  # None = no cap, everyone eligible is selected
    status: str


@dataclass(frozen=True)
class PoolApplicant:
    """One applicant as frozen into a run snapshot."""

    nim: str
    name: str
    raw: dict[str, float]  # raw attribute value per criterion id


@dataclass(frozen=True)
class RecipientRow:
    nim: str
    name: str
    score: float
    rank: int


@dataclass(frozen=True)
class IneligibleRow:
    nim: str
    criterion: str
    reason: str


@dataclass(frozen=True)
class SelectionRun:
    """Immutable snapshot of one selection execution.

    ``run_id`` and ``timestamp`` stay None for offline (CLI) runs so that
    identical inputs serialize to identical bytes.
    """

    period_year: int | None
    period_kind: str | None
    run_id: str | None
    timestamp: str | None
    criteria: tuple[CriterionSpec, ...]
    weights: tuple[float, ...]
    quota: int | None
    pool: tuple[PoolApplicant, ...]
    matrix: DecisionMatrix
    normalized: NormalizedMatrix
    scores: tuple[float, ...]
    ranking: Ranking
    recipients: tuple[RecipientRow, ...]
    ineligible: tuple[IneligibleRow, ...]


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _matrix_to_dict(matrix: DecisionMatrix | NormalizedMatrix) -> dict:
    return {
        "alternatives": list(matrix.alternatives),
        "criteria": list(matrix.criteria),
        "rows": [list(row) for row in matrix.rows],
    }


def _tuple_rows(doc: dict) -> dict:
    return {
        "alternatives": tuple(doc["alternatives"]),
        "criteria": tuple(doc["criteria"]),
        "rows": tuple(tuple(row) for row in doc["rows"]),
    }


def run_to_dict(run: SelectionRun) -> dict:
    period = None
    if run.period_year is not None:
        period = {"year": run.period_year, "kind": run.period_kind}
    return {
        "period": period,
        "run_id": run.run_id,
        "timestamp": run.timestamp,
        "criteria": criteria_to_doc(run.criteria)["criteria"],
        "weights": list(run.weights),
        "quota": run.quota,
        "pool": [{"nim": p.nim, "name": p.name, "raw": dict(p.raw)} for p in run.pool],
        "matrix": _matrix_to_dict(run.matrix),
        "normalized": _matrix_to_dict(run.normalized),
        "scores": list(run.scores),
        "ranking": {
            "entries": [
                {"alternative": e.alternative, "score": e.score, "rank": e.rank}
                for e in run.ranking.entries
            ],
            "tie_break_applied": list(run.ranking.tie_break_applied),
        },
        "recipients": [
            {"nim": r.nim, "name": r.name, "score": r.score, "rank": r.rank}
            for r in run.recipients
        ],
        "ineligible": [
            {"nim": r.nim, "criterion": r.criterion, "reason": r.reason}
            for r in run.ineligible
        ],
    }


def run_from_dict(doc: dict) -> SelectionRun:
    period = doc.get("period") or {}
    return SelectionRun(
        period_year=period.get("year"),
        period_kind=period.get("kind"),
        run_id=doc.get("run_id"),
        timestamp=doc.get("timestamp"),
        criteria=parse_criteria(doc["criteria"]),
        weights=tuple(doc["weights"]),
        quota=doc.get("quota"),
        pool=tuple(
            PoolApplicant(nim=p["nim"], name=p["name"], raw=dict(p["raw"]))
            for p in doc["pool"]
        ),
        matrix=DecisionMatrix(**_tuple_rows(doc["matrix"])),
        normalized=NormalizedMatrix(**_tuple_rows(doc["normalized"])),
        scores=tuple(doc["scores"]),
        ranking=Ranking(
            entries=tuple(
                RankedAlternative(e["alternative"], e["score"], e["rank"])
                for e in doc["ranking"]["entries"]
            ),
            tie_break_applied=tuple(doc["ranking"]["tie_break_applied"]),
        ),
        recipients=tuple(
            RecipientRow(r["nim"], r["name"], r["score"], r["rank"])
            for r in doc["recipients"]
        ),
        ineligible=tuple(
            IneligibleRow(r["nim"], r["criterion"], r["reason"])
            for r in doc["ineligible"]
        ),
    )


def _applicant_to_dict(record: ApplicantRecord) -> dict:
    return {
        "nim": record.nim,
        "name": record.name,
        "program": record.program,
        "semester": record.semester,
        "period_year": record.period_year,
        "nilai": record.nilai,
        "income": record.income,
        "dependents": record.dependents,
    }


def _applicant_from_dict(doc: dict) -> ApplicantRecord:
    return ApplicantRecord(**doc)


# ---------------------------------------------------------------------------
# Envelope I/O
# ---------------------------------------------------------------------------

def _checksum(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _write_document(path: Path, schema: str, payload: dict) -> None:
    document = {"schema": schema, "checksum": _checksum(payload), "payload": payload}
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    os.replace(tmp, path)


def _read_document(path: Path, schema: str) -> dict:
    text = path.read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StorageCorrupt(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(document, dict) or document.get("schema") != schema:
        raise StorageCorrupt(
            f"{path}: schema mismatch, expected {schema}, got {document.get('schema')!r}"
        )
    payload = document.get("payload")
    if not isinstance(payload, dict):
        raise StorageCorrupt(f"{path}: missing payload")
    if document.get("checksum") != _checksum(payload):
        raise StorageCorrupt(f"{path}: checksum mismatch")
    return payload


def _slug(kind: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", kind.lower()).strip("-")
    return slug or "default"


# ---------------------------------------------------------------------------
# Store
# ---------------------------------------------------------------------------

class SelectionStore:
    """Single-writer-per-period registry rooted at a data directory."""

    def __init__(self, root: str | Path) -> None:
        self.root = Path(root)
        self._locks: dict[str, threading.RLock] = {}
        self._meta = threading.Lock()

    # -- paths -------------------------------------------------------------

    def _periods_root(self) -> Path:
        return self.root / "periods"

    def _period_dirname(self, year: int, kind: str) -> str:
        return f"{year}-{_slug(kind)}"

    def _resolve_dirname(self, year: int, kind: str | None) -> str:
        if kind is not None:
            name = self._period_dirname(year, kind)
            if not (self._periods_root() / name / "period.json").exists():
                raise UnknownPeriod(f"no period {year} ({kind})")
            return name
        root = self._periods_root()
        if not root.is_dir():
            raise UnknownPeriod(f"no period for year {year}")
        matches = sorted(
            p.name
            for p in root.iterdir()
            if p.name.startswith(f"{year}-") and (p / "period.json").is_file()
        )
        if not matches:
            raise UnknownPeriod(f"no period for year {year}")
        if len(matches) > 1:
            raise AmbiguousPeriod(
                f"{len(matches)} periods exist for {year}; specify the scholarship kind"
            )
        return matches[0]

    def _lock_for(self, dirname: str) -> threading.RLock:
        with self._meta:
            return self._locks.setdefault(dirname, threading.RLock())

    def _load_period_payload(self, dirname: str) -> dict:
        path = self._periods_root() / dirname / "period.json"
        if not path.exists():
            raise UnknownPeriod(f"no period document at {path}")
        return _read_document(path, PERIOD_SCHEMA)

    def _write_period_payload(self, dirname: str, payload: dict) -> None:
        _write_document(self._periods_root() / dirname / "period.json", PERIOD_SCHEMA, payload)

    @staticmethod
    def _period_of(payload: dict) -> SelectionPeriod:
        return SelectionPeriod(
            year=payload["year"],
            kind=payload["kind"],
            quota=payload.get("quota"),
            status=payload["status"],
        )

    # -- periods -----------------------------------------------------------

    def create_period(
        self, year: int, kind: str, quota: int | None = None
    ) -> SelectionPeriod:
        if quota is not None and quota < 0:
            raise ValueError(f"quota must be non-negative, got {quota}")
        dirname = self._period_dirname(year, kind)
        with self._lock_for(dirname):
            path = self._periods_root() / dirname / "period.json"
            if path.exists():
                raise PeriodExists(f"period {year} ({kind}) already exists")
            payload = {
                "year": year,
                "kind": kind,
                "quota": quota,
                "status": "open",
                "applicants": [],
                "runs": [],
            }
            self._write_period_payload(dirname, payload)
            return self._period_of(payload)

    def list_periods(self) -> list[SelectionPeriod]:
        root = self._periods_root()
        if not root.is_dir():
            return []
        periods = []
        for entry in sorted(root.iterdir()):
            if (entry / "period.json").is_file():
                periods.append(self._period_of(self._load_period_payload(entry.name)))
        return sorted(periods, key=lambda p: (p.year, p.kind))

    def get_period(self, year: int, kind: str | None = None) -> SelectionPeriod:
        dirname = self._resolve_dirname(year, kind)
        return self._period_of(self._load_period_payload(dirname))

    def update_period(
        self,
        year: int,
        kind: str | None = None,
        *,
        quota: Any = _UNSET,
        status: str | None = None,
    ) -> SelectionPeriod:
        """Change quota and/or advance status (open -> selected -> closed)."""
        dirname = self._resolve_dirname(year, kind)
        with self._lock_for(dirname):
            payload = self._load_period_payload(dirname)
            if quota is not _UNSET:
                if quota is not None and (not isinstance(quota, int) or quota < 0):
                    raise ValueError(f"quota must be a non-negative integer, got {quota!r}")
                payload["quota"] = quota
            if status is not None:
                current = payload["status"]
                if status not in PERIOD_STATUSES:
                    raise ValueError(f"unknown status {status!r}")
                if status != current and (current, status) not in _ALLOWED_TRANSITIONS:
                    raise InvalidTransition(f"cannot move period from {current} to {status}")
                payload["status"] = status
            self._write_period_payload(dirname, payload)
            return self._period_of(payload)

    # -- applicants ----------------------------------------------------------

    def add_applicant(
        self, year: int, record: ApplicantRecord, kind: str | None = None
    ) -> None:
        dirname = self._resolve_dirname(year, kind)
        with self._lock_for(dirname):
            payload = self._load_period_payload(dirname)
            if payload["status"] != "open":
                raise PeriodNotOpen(
                    f"period {year} ({payload['kind']}) is {payload['status']}"
                )
            if any(a["nim"] == record.nim for a in payload["applicants"]):
                raise DuplicateApplicant(f"nim {record.nim} is already registered")
            payload["applicants"].append(_applicant_to_dict(record))
            self._write_period_payload(dirname, payload)

    def applicants(self, year: int, kind: str | None = None) -> list[ApplicantRecord]:
        payload = self._load_period_payload(self._resolve_dirname(year, kind))
        return [_applicant_from_dict(a) for a in payload["applicants"]]

    # -- runs ----------------------------------------------------------------

    def save_run(self, run: SelectionRun) -> str:
        """Append a run to its period's history and return the assigned id."""
        if run.period_year is None or run.period_kind is None:
            raise UnknownPeriod("run carries no period reference")
        dirname = self._resolve_dirname(run.period_year, run.period_kind)
        with self._lock_for(dirname):
            payload = self._load_period_payload(dirname)
            seq = len(payload["runs"]) + 1
            run_id = f"{dirname}-{seq:04d}"
            stored = replace(run, run_id=run_id)
            run_path = self._periods_root() / dirname / "runs" / f"{run_id}.json"
            _write_document(run_path, RUN_SCHEMA, run_to_dict(stored))
            payload["runs"].append(run_id)
            self._write_period_payload(dirname, payload)
            return run_id

    def load_run(self, run_id: str) -> SelectionRun:
        dirname, _, seq = run_id.rpartition("-")
        if not dirname or not seq:
            raise UnknownRun(f"malformed run id {run_id!r}")
        path = self._periods_root() / dirname / "runs" / f"{run_id}.json"
        if not path.exists():
            raise UnknownRun(f"no run {run_id}")
        try:
            return run_from_dict(_read_document(path, RUN_SCHEMA))
        except StorageCorrupt:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise StorageCorrupt(f"{path}: malformed run payload ({exc})") from exc

    def run_ids(self, year: int, kind: str | None = None) -> list[str]:
        payload = self._load_period_payload(self._resolve_dirname(year, kind))
        return list(payload["runs"])

    def latest_run(self, year: int, kind: str | None = None) -> SelectionRun:
        ids = self.run_ids(year, kind)
        if not ids:
            raise NoRunYet(f"period {year} has not been selected yet")
        return self.load_run(ids[-1])

    def list_recipients(
        self, year: int, kind: str | None = None
    ) -> tuple[RecipientRow, ...]:
        """Recipients of the latest run, in rank order."""
        return self.latest_run(year, kind).recipients
