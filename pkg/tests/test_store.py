import dataclasses
import json

import pytest

from sawselect import (
    AmbiguousPeriod,
    ApplicantRecord,
    DuplicateApplicant,
    InvalidTransition,
    NoRunYet,
    PeriodExists,
    PeriodNotOpen,
    SelectionStore,
    StorageCorrupt,
    UnknownPeriod,
    UnknownRun,
    execute_selection,
    load_default_criteria,
    run_from_dict,
    run_to_dict,
    weights_of,
)

from conftest import worked_example_records

CRITERIA = load_default_criteria()
WEIGHTS = weights_of(CRITERIA)


def make_run(year=2013, kind="bidik misi", quota=2, timestamp="2026-08-09T00:00:00+00:00"):
    return execute_selection(
        worked_example_records(),
        CRITERIA,
        WEIGHTS,
        quota,
        period_year=year,
        period_kind=kind,
        timestamp=timestamp,
    )


@pytest.fixture
def store(tmp_path):
    return SelectionStore(tmp_path)


# -- periods -----------------------------------------------------------------

def test_create_get_list(store):
    store.create_period(2013, "bidik misi", quota=2)
    period = store.get_period(2013)
    assert (period.year, period.kind, period.quota, period.status) == (
        2013,
        "bidik misi",
        2,
        "open",
    )
    store.create_period(2014, "bidik misi")
    assert [p.year for p in store.list_periods()] == [2013, 2014]


def test_create_duplicate_period(store):
    store.create_period(2013, "bidik misi")
    with pytest.raises(PeriodExists):
        store.create_period(2013, "bidik misi")


def test_unknown_and_ambiguous_period(store):
    with pytest.raises(UnknownPeriod):
        store.get_period(1999)
    store.create_period(2013, "bidik misi")
    store.create_period(2013, "prestasi")
    with pytest.raises(AmbiguousPeriod):
        store.get_period(2013)
    assert store.get_period(2013, "prestasi").kind == "prestasi"


def test_quota_update_and_none_means_uncapped(store):
    store.create_period(2013, "bidik misi")
    assert store.get_period(2013).quota is None
    store.update_period(2013, quota=5)
    assert store.get_period(2013).quota == 5
    store.update_period(2013, quota=None)
    assert store.get_period(2013).quota is None


def test_status_transitions(store):
    store.create_period(2013, "bidik misi")
    store.update_period(2013, status="open")  # no-op allowed
    store.update_period(2013, status="selected")
    store.update_period(2013, status="closed")
    with pytest.raises(InvalidTransition):
        store.update_period(2013, status="selected")


def test_open_cannot_jump_to_closed(store):
    store.create_period(2013, "bidik misi")
    with pytest.raises(InvalidTransition):
        store.update_period(2013, status="closed")


# -- applicants ----------------------------------------------------------------

def record(nim="1", name="a", semester=2):
    return ApplicantRecord(nim, name, "x", semester, 2013, 50.0, 1000.0, 1)


def test_applicants_roundtrip_in_order(store):
    store.create_period(2013, "bidik misi")
    for i in range(3):
        store.add_applicant(2013, record(nim=str(i), name=f"p{i}"))
    assert [r.nim for r in store.applicants(2013)] == ["0", "1", "2"]
    assert store.applicants(2013)[0] == record(nim="0", name="p0")


def test_duplicate_nim_rejected(store):
    store.create_period(2013, "bidik misi")
    store.add_applicant(2013, record())
    with pytest.raises(DuplicateApplicant):
        store.add_applicant(2013, record(name="other"))


def test_registration_requires_open_period(store):
    store.create_period(2013, "bidik misi")
    store.update_period(2013, status="selected")
    with pytest.raises(PeriodNotOpen):
        store.add_applicant(2013, record())


# -- runs ------------------------------------------------------------------------

def test_run_round_trip_identity(store):
    store.create_period(2013, "bidik misi", quota=2)
    run = make_run()
    run_id = store.save_run(run)
    loaded = store.load_run(run_id)
    assert loaded == dataclasses.replace(run, run_id=run_id)


def test_run_survives_process_restart(store, tmp_path):
    store.create_period(2013, "bidik misi", quota=2)
    run_id = store.save_run(make_run())
    fresh = SelectionStore(tmp_path)
    assert fresh.load_run(run_id).recipients == make_run().recipients


def test_run_dict_round_trip():
    run = make_run()
    assert run_from_dict(json.loads(json.dumps(run_to_dict(run)))) == run


def test_save_requires_period(store):
    with pytest.raises(UnknownPeriod):
        store.save_run(make_run(year=1999))
    with pytest.raises(UnknownPeriod):
        store.save_run(dataclasses.replace(make_run(), period_year=None))


def test_load_unknown_run(store):
    store.create_period(2013, "bidik misi")
    with pytest.raises(UnknownRun):
        store.load_run("2013-bidik-misi-0042")
    with pytest.raises(UnknownRun):
        store.load_run("garbage")


def test_truncated_run_file_is_corrupt(store, tmp_path):
    store.create_period(2013, "bidik misi", quota=2)
    run_id = store.save_run(make_run())
    path = tmp_path / "periods" / "2013-bidik-misi" / "runs" / f"{run_id}.json"
    data = path.read_bytes()
    path.write_bytes(data[: len(data) // 2])
    with pytest.raises(StorageCorrupt):
        store.load_run(run_id)


def test_tampered_payload_fails_checksum(store, tmp_path):
    store.create_period(2013, "bidik misi", quota=2)
    run_id = store.save_run(make_run())
    path = tmp_path / "periods" / "2013-bidik-misi" / "runs" / f"{run_id}.json"
    doc = json.loads(path.read_text())
    doc["payload"]["scores"][0] = 0.999
    path.write_text(json.dumps(doc))
    with pytest.raises(StorageCorrupt, match="checksum"):
        store.load_run(run_id)


def test_wrong_schema_is_corrupt(store, tmp_path):
    store.create_period(2013, "bidik misi", quota=2)
    run_id = store.save_run(make_run())
    path = tmp_path / "periods" / "2013-bidik-misi" / "runs" / f"{run_id}.json"
    doc = json.loads(path.read_text())
    doc["schema"] = "something/else"
    path.write_text(json.dumps(doc))
    with pytest.raises(StorageCorrupt, match="schema"):
        store.load_run(run_id)


def test_append_only_history(store):
    store.create_period(2013, "bidik misi", quota=2)
    first = store.save_run(make_run())
    second = store.save_run(make_run(quota=1))
    assert store.run_ids(2013) == [first, second]
    assert first != second
    # the first run is untouched and still loadable
    assert len(store.load_run(first).recipients) == 2
    assert len(store.load_run(second).recipients) == 1
    assert store.latest_run(2013).run_id == second


def test_recipients_come_from_latest_run(store):
    store.create_period(2013, "bidik misi", quota=2)
    with pytest.raises(NoRunYet):
        store.list_recipients(2013)
    store.save_run(make_run())
    assert [r.nim for r in store.list_recipients(2013)] == ["10145001", "0915110"]
    store.save_run(make_run(quota=1))
    assert [r.nim for r in store.list_recipients(2013)] == ["10145001"]


def test_recipients_carry_names_and_scores(store):
    store.create_period(2013, "bidik misi", quota=3)
    store.save_run(make_run(quota=3))
    rows = store.list_recipients(2013)
    assert [(r.rank, r.name) for r in rows] == [(1, "Angga"), (2, "RODIAH"), (3, "SAGA")]
    assert rows[0].score == pytest.approx(0.92, abs=1e-12)


def test_list_recipients_unknown_period(store):
    with pytest.raises(UnknownPeriod):
        store.list_recipients(1999)


def test_concurrent_writes_to_one_period_are_serialized(store):
    import threading

    store.create_period(2013, "bidik misi")
    errors = []

    def register(start: int) -> None:
        try:
            for i in range(start, start + 10):
                store.add_applicant(2013, record(nim=f"n{i}", name=f"p{i}"))
        except Exception as exc:  # pragma: no cover - failure reporting only
            errors.append(exc)

    threads = [threading.Thread(target=register, args=(k * 10,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert errors == []
    assert len(store.applicants(2013)) == 40
    assert len({r.nim for r in store.applicants(2013)}) == 40
