"""Batch front door: validate criteria configs and rank applicant CSVs offline.

Exit codes: 0 success, 1 validation problems (bad weights, config defects,
rejected CSV rows, nobody eligible), 2 I/O problems (unreadable files,
malformed CSV/JSON framing). Results go to stdout; row-level diagnostics go
to stderr. Output is byte-identical for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .applicants import MalformedCsv, MissingColumn, ingest_applicants_csv
from .criteria import CriteriaConfigError, parse_criteria, validate_criteria, weights_of
from .pipeline import NoEligibleApplicants, execute_selection
from .saw import select, validate_weights
from .store import SelectionRun, run_to_dict

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


class _CliFailure(Exception):
    def __init__(self, code: int, messages: list[str]) -> None:
        self.code = code
        self.messages = messages
        super().__init__("; ".join(messages))


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise _CliFailure(EXIT_IO, [f"cannot read {path}: {exc}"]) from exc


def _load_criteria_arg(path: str | None):
    if path is None:
        from .criteria import load_default_criteria

        return load_default_criteria()
    raw = _read_bytes(path)
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise _CliFailure(EXIT_IO, [f"{path}: not a valid JSON document ({exc})"]) from exc
    try:
        return parse_criteria(doc)
    except CriteriaConfigError as exc:
        raise _CliFailure(EXIT_INVALID, [str(exc)]) from exc


def _parse_weights(text: str, expected: int) -> tuple[float, ...]:
    try:
        weights = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise _CliFailure(EXIT_INVALID, [f"--weights must be comma-separated numbers, got {text!r}"]) from None
    if len(weights) != expected:
        raise _CliFailure(EXIT_INVALID, [f"--weights has {len(weights)} values, expected {expected}"])
    problems = validate_weights(weights)
    if problems:
        raise _CliFailure(EXIT_INVALID, problems)
    return weights


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _print_trace(run: SelectionRun, out) -> None:
    headers = ["nim", *run.matrix.criteria]
    crisp_rows = [
        [alt, *(f"{v:g}" for v in row)]
        for alt, row in zip(run.matrix.alternatives, run.matrix.rows)
    ]
    out.write("crisp matrix\n")
    out.write(_table(headers, crisp_rows) + "\n\n")
    norm_rows = [
        [alt, *(f"{v:.6f}" for v in row)]
        for alt, row in zip(run.normalized.alternatives, run.normalized.rows)
    ]
    out.write("normalized matrix\n")
    out.write(_table(headers, norm_rows) + "\n\n")


def _cmd_rank(args: argparse.Namespace) -> int:
    criteria = _load_criteria_arg(args.criteria)
    problems = validate_criteria(criteria)
    if problems:
        raise _CliFailure(EXIT_INVALID, problems)
    weights = (
        _parse_weights(args.weights, len(criteria))
        if args.weights is not None
        else weights_of(criteria)
    )

    raw = _read_bytes(args.applicants)
    try:
        records, row_errors = ingest_applicants_csv(raw)
    except MalformedCsv as exc:
        raise _CliFailure(EXIT_IO, [str(exc)]) from exc
    except MissingColumn as exc:
        raise _CliFailure(EXIT_INVALID, [str(exc)]) from exc
    if row_errors:
        raise _CliFailure(
            EXIT_INVALID, [f"line {e.line}: {e.reason}" for e in row_errors]
        )
    if not records:
        raise _CliFailure(EXIT_INVALID, ["the CSV contains no applicant rows"])

    try:
        run = execute_selection(records, criteria, weights, args.top)
    except NoEligibleApplicants as exc:
        raise _CliFailure(
            EXIT_INVALID,
            ["no eligible applicants"]
            + [f"{row.nim}: {row.reason}" for row in exc.ineligible],
        ) from exc

    for row in run.ineligible:
        sys.stderr.write(f"ineligible {row.nim}: {row.reason}\n")

    out = sys.stdout
    if args.format == "json":
        out.write(json.dumps(run_to_dict(run), indent=2) + "\n")
        return EXIT_OK

    names = {p.nim: p.name for p in run.pool}
    shown = select(run.ranking, args.top)
    if args.format == "csv":
        out.write("rank,nim,nama,score\n")
        for entry in shown:
            out.write(f"{entry.rank},{entry.alternative},{names[entry.alternative]},{entry.score!r}\n")
        return EXIT_OK

    if args.trace:
        _print_trace(run, out)
    rows = [
        [str(e.rank), e.alternative, names[e.alternative], f"{e.score:.6f}"]
        for e in shown
    ]
    out.write(_table(["rank", "nim", "nama", "score"], rows) + "\n")
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    criteria = _load_criteria_arg(args.criteria)
    problems = validate_criteria(criteria)
    if problems:
        for line in problems:
            sys.stdout.write(line + "\n")
        return EXIT_INVALID
    sys.stdout.write(f"configuration OK ({len(criteria)} criteria)\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sawselect",
        description="Fuzzy-scale scoring and simple-additive-weighting ranking of applicants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rank_p = sub.add_parser("rank", help="rank an applicant CSV")
    rank_p.add_argument("--applicants", required=True, help="applicant CSV path, or - for stdin")
    rank_p.add_argument("--criteria", help="criteria config JSON (default: bundled config)")
    rank_p.add_argument("--weights", help="comma-separated weight override, e.g. 0.4,0.3,0.1,0.2")
    rank_p.add_argument("--top", type=int, help="only keep the best N applicants")
    rank_p.add_argument(
        "--format", choices=("table", "json", "csv"), default="table", help="output format"
    )
    rank_p.add_argument(
        "--trace", action="store_true", help="also print the crisp and normalized matrices"
    )
    rank_p.set_defaults(func=_cmd_rank)

    val_p = sub.add_parser("validate", help="validate a criteria config")
    val_p.add_argument("--criteria", help="criteria config JSON (default: bundled config)")
    val_p.set_defaults(func=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "rank" and args.top is not None and args.top < 0:
        sys.stderr.write("--top must be non-negative\n")
        return EXIT_INVALID
    try:
        return args.func(args)
    except _CliFailure as failure:
        for line in failure.messages:
            sys.stderr.write(line + "\n")
        return failure.code


if __name__ == "__main__":
    sys.exit(main())
