"""Applicant records and CSV ingestion.

The canonical CSV columns mirror the registration form:
``nama, nim, jurusan, semester, tahun, nilai, penghasilan, tanggungan``.
Header matching is case-insensitive and a small documented alias map accepts
the common English column names. Money values may carry an ``Rp`` prefix and
comma digit grouping ("Rp1,500,000").
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

CANONICAL_COLUMNS = (
    "nama",
    "nim",
    "jurusan",
    "semester",
    "tahun",
    "nilai",
    "penghasilan",
    "tanggungan",
)

# English header names accepted as-is; nothing else is guessed.
HEADER_ALIASES = {
    "name": "nama",
    "program": "jurusan",
    "year": "tahun",
    "gpa": "nilai",
    "score": "nilai",
    "income": "penghasilan",
    "dependents": "tanggungan",
}


class MalformedCsv(ValueError):
    """The file cannot be parsed as UTF-8 CSV at all."""


class MissingColumn(ValueError):
    """One or more canonical columns are absent from the header."""

    def __init__(self, columns: list[str]) -> None:
        self.columns = columns
        super().__init__(f"missing column(s): {', '.join(columns)}")


@dataclass(frozen=True)
class ApplicantRecord:
    """One scholarship applicant as registered for a period."""

    nim: str
    name: str
    program: str
    semester: int
    period_year: int
    nilai: float
    income: float
    dependents: int

    def raw_values(self) -> dict[str, float]:
        """Attribute values keyed by canonical attribute name."""
        return {
            "nilai": self.nilai,
            "penghasilan": self.income,
            "tanggungan": self.dependents,
            "semester": self.semester,
        }


@dataclass(frozen=True)
class RowError:
    """One rejected CSV row: 1-based line number and the reason."""

    line: int
    reason: str


def parse_rupiah(text: str) -> float:
    """Parse a money amount, tolerating an Rp prefix and comma grouping."""
    cleaned = text.strip()
    if cleaned.lower().startswith("rp"):
        cleaned = cleaned[2:]
    cleaned = cleaned.replace(",", "").replace(" ", "")
    if not cleaned:
        raise ValueError(f"empty money value {text!r}")
    value = float(cleaned)
    if not math.isfinite(value):
        raise ValueError(f"non-finite money value {text!r}")
    return value


def _parse_int(text: str, field: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ValueError(f"{field} must be an integer, got {text!r}") from None


def _parse_float(text: str, field: str) -> float:
    try:
        value = float(text.strip())
    except ValueError:
        raise ValueError(f"{field} must be a number, got {text!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"{field} must be finite, got {text!r}")
    return value


def _resolve_header(raw_header: list[str]) -> dict[str, int]:
    """Map canonical column names to positions, applying the alias table."""
    positions: dict[str, int] = {}
    for idx, cell in enumerate(raw_header):
        key = cell.strip().lower()
        key = HEADER_ALIASES.get(key, key)
        if key in CANONICAL_COLUMNS and key not in positions:
            positions[key] = idx
    missing = [col for col in CANONICAL_COLUMNS if col not in positions]
    if missing:
        raise MissingColumn(missing)
    return positions


def _record_from_row(
    row: list[str], positions: dict[str, int], period_year: int | None
) -> ApplicantRecord:
    def cell(col: str) -> str:
        return row[positions[col]]

    nim = cell("nim").strip()
    if not nim:
        raise ValueError("nim must not be empty")
    name = cell("nama").strip()
    if not name:
        raise ValueError("nama must not be empty")
    tahun = _parse_int(cell("tahun"), "tahun")
    if period_year is not None and tahun != period_year:
        raise ValueError(f"tahun {tahun} does not match the period year {period_year}")
    income = parse_rupiah(cell("penghasilan"))
    if income < 0:
        raise ValueError(f"penghasilan must be non-negative, got {income:g}")
    dependents = _parse_int(cell("tanggungan"), "tanggungan")
    if dependents < 0:
        raise ValueError(f"tanggungan must be non-negative, got {dependents}")
    return ApplicantRecord(
        nim=nim,
        name=name,
        program=cell("jurusan").strip(),
        semester=_parse_int(cell("semester"), "semester"),
        period_year=tahun,
        nilai=_parse_float(cell("nilai"), "nilai"),
        income=income,
        dependents=dependents,
    )


def ingest_applicants_csv(
    data: bytes, period_year: int | None = None
) -> tuple[list[ApplicantRecord], list[RowError]]:
    """Parse an applicant CSV into records plus a per-row rejection report.

    Good rows are returned in file order; bad rows (unparseable fields,
    duplicate nim, wrong field count, year mismatch against ``period_year``)
    are reported with their 1-based line number. Rows in = rows accepted +
    rows rejected, always.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedCsv(f"not valid UTF-8: {exc}") from exc
    if "\x00" in text:
        raise MalformedCsv("file contains NUL bytes")

    try:
        reader = csv.reader(io.StringIO(text))
        table = list(reader)
    except csv.Error as exc:
        raise MalformedCsv(f"CSV framing error: {exc}") from exc

    # Skip fully empty lines but remember original line numbers.
    numbered = [(i + 1, row) for i, row in enumerate(table) if any(c.strip() for c in row)]
    if not numbered:
        raise MissingColumn(list(CANONICAL_COLUMNS))

    header_line, header = numbered[0]
    positions = _resolve_header(header)
    width = len(header)

    records: list[ApplicantRecord] = []
    errors: list[RowError] = []
    seen_nims: set[str] = set()
    for line, row in numbered[1:]:
        if len(row) != width:
            errors.append(RowError(line, f"expected {width} fields, got {len(row)}"))
            continue
        try:
            record = _record_from_row(row, positions, period_year)
        except ValueError as exc:
            errors.append(RowError(line, str(exc)))
            continue
        if record.nim in seen_nims:
            errors.append(RowError(line, f"duplicate nim {record.nim}"))
            continue
        seen_nims.add(record.nim)
        records.append(record)
    return records, errors
