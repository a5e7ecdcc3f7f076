"""Walk the full pipeline on the bundled worked example and compare two
weight vectors side by side.

    python scripts/demo_selection.py
"""

from pathlib import Path

from sawselect import (
    execute_selection,
    ingest_applicants_csv,
    load_default_criteria,
    weights_of,
)

POOL = Path(__file__).resolve().parent.parent / "tests" / "data" / "worked_example.csv"


def show(run, label: str) -> None:
    print(f"--- {label} (weights {tuple(round(w, 2) for w in run.weights)}) ---")
    print("crisp matrix:")
    for nim, row in zip(run.matrix.alternatives, run.matrix.rows):
        print(f"  {nim:>10}  {row}")
    print("scores and ranking:")
    names = {p.nim: p.name for p in run.pool}
    for entry in run.ranking.entries:
        print(f"  #{entry.rank}  {names[entry.alternative]:<8} {entry.score:.6f}")
    print()


def main() -> None:
    criteria = load_default_criteria()
    records, errors = ingest_applicants_csv(POOL.read_bytes())
    assert not errors, errors

    default = execute_selection(records, criteria, weights_of(criteria), None)
    show(default, "default weights")

    # what-if: semester dominates
    alt = execute_selection(records, criteria, (0.1, 0.1, 0.1, 0.7), None)
    show(alt, "semester-heavy override")

    moved = [
        (d.alternative, d.rank, a.rank)
        for d, a in zip(
            sorted(default.ranking.entries, key=lambda e: e.alternative),
            sorted(alt.ranking.entries, key=lambda e: e.alternative),
        )
        if d.rank != a.rank
    ]
    print("rank changes (nim, before, after):", moved or "none")


if __name__ == "__main__":
    main()
