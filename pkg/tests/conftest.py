import hashlib
from pathlib import Path

import pytest

from sawselect import ApplicantRecord, load_default_criteria

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def criteria():
    return load_default_criteria()


def worked_example_records() -> list[ApplicantRecord]:
    """Three applicants whose crisp rows are (2,8,8,6), (2,4,8,10), (2,4,8,6)."""
    return [
        ApplicantRecord("10145001", "Angga", "Manajemen Informatika", 4, 2013, 3.55, 1_500_000.0, 4),
        ApplicantRecord("0915110", "RODIAH", "Teknik Informatika", 6, 2013, 3.01, 5_000_000.0, 4),
        ApplicantRecord("08141156", "SAGA", "Sistem Informasi", 4, 2013, 3.25, 6_000_000.0, 4),
    ]


@pytest.fixture
def worked_records():
    return worked_example_records()


def snapshot_tree(root: Path) -> dict[str, str]:
    """Path -> content hash for every file under root (byte-level snapshot)."""
    out = {}
    for path in sorted(root.rglob("*")):
        if path.is_file():
            out[str(path.relative_to(root))] = hashlib.sha256(path.read_bytes()).hexdigest()
    return out
