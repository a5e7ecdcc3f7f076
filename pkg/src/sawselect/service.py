"""JSON HTTP service around the selection registry and pipeline.

Public surface: applicant self-registration and recipient listings. Admin
surface (bearer-token sessions): period management, pool inspection,
selection execution and a non-persisted what-if re-ranking used for weight
exploration. Errors come back as problem documents
``{"code": ..., "message": ..., "details": ...}``.
"""

from __future__ import annotations

import math
import secrets
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field, field_validator

from .applicants import ApplicantRecord
from .criteria import load_criteria, load_default_criteria, validate_criteria, weights_of
from .pipeline import NoEligibleApplicants, execute_selection
from .store import (
    AmbiguousPeriod,
    DuplicateApplicant,
    InvalidTransition,
    NoRunYet,
    PeriodExists,
    PeriodNotOpen,
    SelectionPeriod,
    SelectionRun,
    SelectionStore,
    StorageCorrupt,
    UnknownPeriod,
    UnknownRun,
    run_to_dict,
)
from .saw import validate_weights


@dataclass
class ServiceConfig:
    data_dir: Path
    admin_username: str = "admin"
    admin_password: str = "admin"
    criteria_path: Path | None = None
    token_ttl_seconds: float = 12 * 3600
    cors: bool = True
    static_dir: Path | None = None


class ApiProblem(Exception):
    def __init__(self, status: int, code: str, message: str, details: Any = None) -> None:
        self.status = status
        self.code = code
        self.message = message
        self.details = details
        super().__init__(message)


def _problem_response(status: int, code: str, message: str, details: Any = None) -> JSONResponse:
    body: dict[str, Any] = {"code": code, "message": message}
    if details is not None:
        body["details"] = details
    return JSONResponse(status_code=status, content=body)


# ---------------------------------------------------------------------------
# Request bodies
# ---------------------------------------------------------------------------

class LoginIn(BaseModel):
    username: str
    password: str


class ApplicantIn(BaseModel):
    nim: str = Field(min_length=1)
    name: str = Field(min_length=1)
    program: str = ""
    semester: int
    period_year: int
    nilai: float = Field(allow_inf_nan=False)
    income: float = Field(ge=0, allow_inf_nan=False)
    dependents: int = Field(ge=0)
    kind: str | None = None

    @field_validator("nim", "name")
    @classmethod
    def _strip(cls, value: str) -> str:
        stripped = value.strip()
        if not stripped:
            raise ValueError("must not be blank")
        return stripped

    def record(self) -> ApplicantRecord:
        return ApplicantRecord(
            nim=self.nim,
            name=self.name,
            program=self.program,
            semester=self.semester,
            period_year=self.period_year,
            nilai=self.nilai,
            income=self.income,
            dependents=self.dependents,
        )


class PeriodIn(BaseModel):
    year: int
    kind: str = Field(min_length=1)
    quota: int | None = Field(default=None, ge=0)


class PeriodPatch(BaseModel):
    quota: int | None = Field(default=None, ge=0)
    status: str | None = None


class WhatIfIn(BaseModel):
    year: int
    kind: str | None = None
    weights: list[float] = Field(min_length=1)
    quota: int | None = Field(default=None, ge=0)

    @field_validator("weights")
    @classmethod
    def _finite(cls, values: list[float]) -> list[float]:
        if any(not math.isfinite(w) for w in values):
            raise ValueError("weights must be finite")
        return values


class SelectionIn(BaseModel):
    """Optional selection overrides (e.g. applying a what-if weight vector)."""

    weights: list[float] | None = None


# ---------------------------------------------------------------------------
# Session registry
# ---------------------------------------------------------------------------

@dataclass
class _Sessions:
    ttl: float
    tokens: dict[str, float] = field(default_factory=dict)

    def issue(self) -> tuple[str, float]:
        token = secrets.token_urlsafe(16)  # 128 bits
        expiry = time.time() + self.ttl
        self.tokens[token] = expiry
        return token, expiry

    def check(self, token: str | None) -> bool:
        if not token or token not in self.tokens:
            return False
        if time.time() >= self.tokens[token]:
            del self.tokens[token]
            return False
        return True

    def revoke(self, token: str) -> None:
        self.tokens.pop(token, None)


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _period_json(period: SelectionPeriod, applicant_count: int | None = None) -> dict:
    doc: dict[str, Any] = {
        "year": period.year,
        "kind": period.kind,
        "quota": period.quota,
        "status": period.status,
    }
    if applicant_count is not None:
        doc["applicants"] = applicant_count
    return doc


def _run_response(run: SelectionRun) -> dict:
    """Run document plus per-applicant rows in rank order."""
    doc = run_to_dict(run)
    index = {nim: i for i, nim in enumerate(run.matrix.alternatives)}
    names = {p.nim: p.name for p in run.pool}
    raws = {p.nim: p.raw for p in run.pool}
    recipient_nims = {r.nim for r in run.recipients}
    rows = []
    for entry in run.ranking.entries:
        i = index[entry.alternative]
        rows.append(
            {
                "nim": entry.alternative,
                "name": names.get(entry.alternative, ""),
                "raw": raws.get(entry.alternative, {}),
                "crisp": list(run.matrix.rows[i]),
                "normalized": list(run.normalized.rows[i]),
                "score": entry.score,
                "rank": entry.rank,
                "recipient": entry.alternative in recipient_nims,
            }
        )
    doc["rows"] = rows
    return doc


# ---------------------------------------------------------------------------
# Application factory
# ---------------------------------------------------------------------------

def create_app(config: ServiceConfig) -> FastAPI:
    criteria = (
        load_criteria(config.criteria_path)
        if config.criteria_path is not None
        else load_default_criteria()
    )
    problems = validate_criteria(criteria)
    if problems:
        raise ValueError("invalid criteria configuration: " + "; ".join(problems))
    default_weights = weights_of(criteria)

    store = SelectionStore(config.data_dir)
    sessions = _Sessions(ttl=config.token_ttl_seconds)
    app = FastAPI(title="sawselect", docs_url=None, redoc_url=None)

    if config.cors:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    # -- error plumbing ----------------------------------------------------

    @app.exception_handler(ApiProblem)
    async def _on_problem(_request: Request, exc: ApiProblem) -> JSONResponse:
        return _problem_response(exc.status, exc.code, exc.message, exc.details)

    @app.exception_handler(RequestValidationError)
    async def _on_validation(_request: Request, exc: RequestValidationError) -> JSONResponse:
        details = [
            {
                "field": ".".join(str(part) for part in err["loc"] if part != "body"),
                "message": err["msg"],
            }
            for err in exc.errors()
        ]
        return _problem_response(422, "validation_error", "invalid request body", details)

    @app.exception_handler(StorageCorrupt)
    async def _on_corrupt(_request: Request, exc: StorageCorrupt) -> JSONResponse:
        return _problem_response(500, "storage_corrupt", str(exc))

    def bearer_token(request: Request) -> str | None:
        header = request.headers.get("authorization", "")
        if header.lower().startswith("bearer "):
            return header[7:].strip()
        return None

    def require_admin(request: Request) -> str:
        token = bearer_token(request)
        if not sessions.check(token):
            raise ApiProblem(401, "unauthorized", "a valid session token is required")
        return token  # type: ignore[return-value]

    def resolve_period(year: int, kind: str | None) -> SelectionPeriod:
        try:
            return store.get_period(year, kind)
        except UnknownPeriod as exc:
            raise ApiProblem(404, "unknown_period", str(exc)) from exc
        except AmbiguousPeriod as exc:
            raise ApiProblem(409, "ambiguous_period", str(exc)) from exc

    # -- auth ----------------------------------------------------------------

    @app.post("/api/login")
    def login(body: LoginIn) -> dict:
        user_ok = secrets.compare_digest(
            body.username.encode("utf-8"), config.admin_username.encode("utf-8")
        )
        pass_ok = secrets.compare_digest(
            body.password.encode("utf-8"), config.admin_password.encode("utf-8")
        )
        if not (user_ok and pass_ok):
            raise ApiProblem(401, "bad_credentials", "unknown username or password")
        token, expiry = sessions.issue()
        expires_at = datetime.fromtimestamp(expiry, tz=timezone.utc).isoformat(
            timespec="seconds"
        )
        return {"token": token, "expires_at": expires_at}

    @app.post("/api/logout", status_code=204)
    def logout(request: Request) -> None:
        token = require_admin(request)
        sessions.revoke(token)

    # -- periods ---------------------------------------------------------------

    @app.get("/api/periods")
    def list_periods() -> dict:
        periods = [
            _period_json(p, applicant_count=len(store.applicants(p.year, p.kind)))
            for p in store.list_periods()
        ]
        return {"periods": periods}

    @app.post("/api/periods", status_code=201)
    def create_period(request: Request, body: PeriodIn) -> dict:
        require_admin(request)
        try:
            period = store.create_period(body.year, body.kind, body.quota)
        except PeriodExists as exc:
            raise ApiProblem(409, "period_exists", str(exc)) from exc
        return _period_json(period, applicant_count=0)

    @app.patch("/api/periods/{year}")
    def patch_period(
        request: Request, year: int, body: PeriodPatch, kind: str | None = None
    ) -> dict:
        require_admin(request)
        resolve_period(year, kind)
        kwargs: dict[str, Any] = {}
        if "quota" in body.model_fields_set:
            kwargs["quota"] = body.quota
        if body.status is not None:
            kwargs["status"] = body.status
        try:
            period = store.update_period(year, kind, **kwargs)
        except InvalidTransition as exc:
            raise ApiProblem(409, "invalid_transition", str(exc)) from exc
        except ValueError as exc:
            raise ApiProblem(422, "validation_error", str(exc)) from exc
        return _period_json(period, applicant_count=len(store.applicants(year, kind)))

    # -- registration ------------------------------------------------------------

    @app.post("/api/applicants", status_code=201)
    def register_applicant(body: ApplicantIn) -> dict:
        period = resolve_period(body.period_year, body.kind)
        try:
            store.add_applicant(period.year, body.record(), period.kind)
        except PeriodNotOpen as exc:
            raise ApiProblem(409, "period_not_open", str(exc)) from exc
        except DuplicateApplicant as exc:
            raise ApiProblem(409, "duplicate_nim", str(exc)) from exc
        return {
            "applicant": body.record().__dict__,
            "period": {"year": period.year, "kind": period.kind},
        }

    @app.get("/api/periods/{year}/applicants")
    def period_applicants(request: Request, year: int, kind: str | None = None) -> dict:
        require_admin(request)
        period = resolve_period(year, kind)
        records = store.applicants(period.year, period.kind)
        return {
            "period": _period_json(period),
            "applicants": [r.__dict__ for r in records],
        }

    # -- selection -----------------------------------------------------------------

    def validated_weights(values: list[float]) -> tuple[float, ...]:
        problems = validate_weights(values)
        if problems:
            raise ApiProblem(422, "invalid_weights", "weight override is invalid", problems)
        if len(values) != len(criteria):
            raise ApiProblem(
                422,
                "invalid_weights",
                f"expected {len(criteria)} weights, got {len(values)}",
            )
        return tuple(values)

    @app.post("/api/periods/{year}/selection")
    def run_selection(
        request: Request,
        year: int,
        kind: str | None = None,
        body: SelectionIn | None = None,
    ) -> dict:
        require_admin(request)
        period = resolve_period(year, kind)
        if period.status == "closed":
            raise ApiProblem(409, "period_closed", f"period {year} ({period.kind}) is closed")
        weights = (
            validated_weights(body.weights)
            if body is not None and body.weights is not None
            else default_weights
        )
        records = store.applicants(period.year, period.kind)
        try:
            run = execute_selection(
                records,
                criteria,
                weights,
                period.quota,
                period_year=period.year,
                period_kind=period.kind,
                timestamp=_now_iso(),
            )
        except NoEligibleApplicants as exc:
            raise ApiProblem(
                422,
                "no_eligible_applicants",
                "no applicant in this period can be scored",
                details=[row.__dict__ for row in exc.ineligible],
            ) from exc
        run_id = store.save_run(run)
        if period.status == "open":
            store.update_period(period.year, period.kind, status="selected")
        stored = store.load_run(run_id)
        return _run_response(stored)

    @app.get("/api/periods/{year}/selection")
    def latest_selection(request: Request, year: int, kind: str | None = None) -> dict:
        require_admin(request)
        period = resolve_period(year, kind)
        try:
            run = store.latest_run(period.year, period.kind)
        except NoRunYet as exc:
            raise ApiProblem(409, "no_run_yet", str(exc)) from exc
        return _run_response(run)

    @app.get("/api/periods/{year}/recipients")
    def recipients(year: int, kind: str | None = None) -> dict:
        period = resolve_period(year, kind)
        try:
            run = store.latest_run(period.year, period.kind)
        except NoRunYet as exc:
            raise ApiProblem(409, "no_run_yet", str(exc)) from exc
        return {
            "period": {"year": period.year, "kind": period.kind},
            "run_id": run.run_id,
            "recipients": [r.__dict__ for r in run.recipients],
        }

    # -- what-if -------------------------------------------------------------------

    @app.post("/api/whatif")
    def what_if(request: Request, body: WhatIfIn) -> dict:
        require_admin(request)
        weights = validated_weights(body.weights)
        period = resolve_period(body.year, body.kind)
        records = store.applicants(period.year, period.kind)
        quota = body.quota if body.quota is not None else period.quota
        try:
            run = execute_selection(
                records,
                criteria,
                weights,
                quota,
                period_year=period.year,
                period_kind=period.kind,
            )
        except NoEligibleApplicants as exc:
            raise ApiProblem(
                422,
                "no_eligible_applicants",
                "no applicant in this period can be scored",
                details=[row.__dict__ for row in exc.ineligible],
            ) from exc
        return _run_response(run)

    if config.static_dir is not None and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app
