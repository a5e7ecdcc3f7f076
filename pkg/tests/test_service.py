import pytest
from fastapi.testclient import TestClient

from sawselect import SelectionStore
from sawselect.service import ServiceConfig, create_app

from conftest import snapshot_tree, worked_example_records

TOL = 1e-12


@pytest.fixture
def data_dir(tmp_path):
    return tmp_path / "data"


@pytest.fixture
def client(data_dir):
    app = create_app(ServiceConfig(data_dir=data_dir, admin_password="s3cret"))
    with TestClient(app) as client:
        yield client


@pytest.fixture
def token(client):
    response = client.post("/api/login", json={"username": "admin", "password": "s3cret"})
    assert response.status_code == 200
    return response.json()["token"]


@pytest.fixture
def auth(token):
    return {"Authorization": f"Bearer {token}"}


def applicant_payload(record, kind="bidik misi"):
    return {
        "nim": record.nim,
        "name": record.name,
        "program": record.program,
        "semester": record.semester,
        "period_year": record.period_year,
        "nilai": record.nilai,
        "income": record.income,
        "dependents": record.dependents,
        "kind": kind,
    }


@pytest.fixture
def seeded(client, auth):
    """Period 2013 with the three worked-example applicants, quota 2."""
    response = client.post(
        "/api/periods", json={"year": 2013, "kind": "bidik misi", "quota": 2}, headers=auth
    )
    assert response.status_code == 201
    for record in worked_example_records():
        response = client.post("/api/applicants", json=applicant_payload(record))
        assert response.status_code == 201
    return client


# -- auth -----------------------------------------------------------------

def test_login_bad_credentials(client):
    assert client.post("/api/login", json={"username": "admin", "password": "no"}).status_code == 401
    assert client.post("/api/login", json={"username": "root", "password": "s3cret"}).status_code == 401


def test_logout_invalidates_token(client, auth):
    assert client.post("/api/logout", headers=auth).status_code == 204
    response = client.get("/api/periods/2013/applicants", headers=auth)
    assert response.status_code == 401


def test_admin_routes_require_token(client):
    cases = [
        ("GET", "/api/periods/2013/applicants", None),
        ("POST", "/api/periods/2013/selection", None),
        ("GET", "/api/periods/2013/selection", None),
        ("POST", "/api/periods", {"year": 2013, "kind": "x"}),
        ("PATCH", "/api/periods/2013", {"quota": 1}),
        ("POST", "/api/whatif", {"year": 2013, "weights": [1.0]}),
        ("POST", "/api/logout", None),
    ]
    for method, url, body in cases:
        response = client.request(method, url, json=body)
        assert response.status_code == 401, url
        assert response.json()["code"] in ("unauthorized",)


def test_garbage_and_expired_style_tokens_rejected(client):
    headers = {"Authorization": "Bearer bogus-token"}
    assert client.get("/api/periods/2013/applicants", headers=headers).status_code == 401


def test_public_routes_need_no_token(seeded):
    assert seeded.get("/api/periods").status_code == 200
    # recipients is public; before any run it reports 409, never 401
    assert seeded.get("/api/periods/2013/recipients").status_code == 409


# -- registration ------------------------------------------------------------

def test_register_and_list(seeded, auth):
    response = seeded.get("/api/periods/2013/applicants", headers=auth)
    assert response.status_code == 200
    listed = response.json()["applicants"]
    assert [a["nim"] for a in listed] == ["10145001", "0915110", "08141156"]


def test_register_duplicate_nim(seeded):
    record = worked_example_records()[0]
    response = seeded.post("/api/applicants", json=applicant_payload(record))
    assert response.status_code == 409
    assert response.json()["code"] == "duplicate_nim"


def test_register_unknown_period(client):
    record = worked_example_records()[0]
    response = client.post("/api/applicants", json=applicant_payload(record))
    assert response.status_code == 404
    assert response.json()["code"] == "unknown_period"


def test_register_validation_details(seeded):
    bad = applicant_payload(worked_example_records()[0])
    bad["nim"] = ""
    bad["income"] = -5
    response = seeded.post("/api/applicants", json=bad)
    assert response.status_code == 422
    body = response.json()
    assert body["code"] == "validation_error"
    fields = {d["field"] for d in body["details"]}
    assert {"nim", "income"} <= fields


def test_register_closed_period(seeded, auth):
    seeded.patch("/api/periods/2013", json={"status": "selected"}, headers=auth)
    record = applicant_payload(worked_example_records()[0])
    record["nim"] = "fresh"
    response = seeded.post("/api/applicants", json=record)
    assert response.status_code == 409
    assert response.json()["code"] == "period_not_open"


def test_semester_nine_registers_fine(seeded):
    payload = applicant_payload(worked_example_records()[0])
    payload.update(nim="99999", semester=9)
    assert seeded.post("/api/applicants", json=payload).status_code == 201


# -- selection ----------------------------------------------------------------

def test_selection_worked_example(seeded, auth):
    response = seeded.post("/api/periods/2013/selection", headers=auth)
    assert response.status_code == 200
    run = response.json()
    assert run["matrix"]["rows"] == [[2, 8, 8, 6], [2, 4, 8, 10], [2, 4, 8, 6]]
    assert run["scores"] == pytest.approx([0.92, 0.85, 0.77], abs=TOL)
    assert [r["nim"] for r in run["recipients"]] == ["10145001", "0915110"]
    assert [e["rank"] for e in run["ranking"]["entries"]] == [1, 2, 3]
    assert run["ineligible"] == []
    # period advanced to selected
    periods = seeded.get("/api/periods").json()["periods"]
    assert periods[0]["status"] == "selected"


def test_selection_row_shape(seeded, auth):
    run = seeded.post("/api/periods/2013/selection", headers=auth).json()
    row = run["rows"][0]
    assert {"nim", "name", "crisp", "normalized", "score", "rank", "recipient"} <= set(row)
    assert row["recipient"] is True and row["rank"] == 1
    assert len(run["rows"]) == 3
    assert [r["recipient"] for r in run["rows"]] == [True, True, False]


def test_selection_requires_eligible_applicants(client, auth, data_dir):
    client.post("/api/periods", json={"year": 2014, "kind": "bidik misi"}, headers=auth)
    payload = applicant_payload(worked_example_records()[0])
    payload.update(period_year=2014, semester=9)
    client.post("/api/applicants", json=payload)
    response = client.post("/api/periods/2014/selection", headers=auth)
    assert response.status_code == 422
    body = response.json()
    assert body["code"] == "no_eligible_applicants"
    assert body["details"][0]["criterion"] == "C4"
    # a failed run writes nothing and the period stays open
    store = SelectionStore(data_dir)
    assert store.run_ids(2014) == []
    assert store.get_period(2014).status == "open"


def test_selection_empty_period(client, auth):
    client.post("/api/periods", json={"year": 2015, "kind": "bidik misi"}, headers=auth)
    response = client.post("/api/periods/2015/selection", headers=auth)
    assert response.status_code == 422


def test_selection_mixed_pool_reports_ineligible(seeded, auth):
    payload = applicant_payload(worked_example_records()[0])
    payload.update(nim="99999", name="Late", semester=9)
    seeded.post("/api/applicants", json=payload)
    run = seeded.post("/api/periods/2013/selection", headers=auth).json()
    assert [r["nim"] for r in run["ineligible"]] == ["99999"]
    assert len(run["rows"]) == 3


def test_selection_on_closed_period(seeded, auth):
    seeded.patch("/api/periods/2013", json={"status": "selected"}, headers=auth)
    seeded.patch("/api/periods/2013", json={"status": "closed"}, headers=auth)
    response = seeded.post("/api/periods/2013/selection", headers=auth)
    assert response.status_code == 409
    assert response.json()["code"] == "period_closed"


def test_selection_unknown_period(client, auth):
    assert client.post("/api/periods/1999/selection", headers=auth).status_code == 404


def test_get_selection_before_run(seeded, auth):
    response = seeded.get("/api/periods/2013/selection", headers=auth)
    assert response.status_code == 409
    assert response.json()["code"] == "no_run_yet"


def test_get_selection_returns_latest_run(seeded, auth):
    posted = seeded.post("/api/periods/2013/selection", headers=auth).json()
    fetched = seeded.get("/api/periods/2013/selection", headers=auth).json()
    assert fetched == posted


def test_idempotent_reads(seeded, auth):
    seeded.post("/api/periods/2013/selection", headers=auth)
    first = seeded.get("/api/periods/2013/selection", headers=auth)
    second = seeded.get("/api/periods/2013/selection", headers=auth)
    assert first.content == second.content


def test_rerun_appends_and_supersedes(seeded, auth, data_dir):
    first = seeded.post("/api/periods/2013/selection", headers=auth).json()
    seeded.patch("/api/periods/2013", json={"quota": 1}, headers=auth)
    second = seeded.post("/api/periods/2013/selection", headers=auth).json()
    assert first["run_id"] != second["run_id"]
    assert len(second["recipients"]) == 1
    recipients = seeded.get("/api/periods/2013/recipients").json()
    assert recipients["run_id"] == second["run_id"]
    assert [r["nim"] for r in recipients["recipients"]] == ["10145001"]
    # both runs remain on disk
    store = SelectionStore(data_dir)
    assert store.run_ids(2013) == [first["run_id"], second["run_id"]]


def test_recipients_public_route(seeded, auth):
    seeded.post("/api/periods/2013/selection", headers=auth)
    response = seeded.get("/api/periods/2013/recipients")
    assert response.status_code == 200
    rows = response.json()["recipients"]
    assert [(r["rank"], r["nim"]) for r in rows] == [(1, "10145001"), (2, "0915110")]
    assert rows[0]["score"] == pytest.approx(0.92, abs=TOL)


def test_recipients_unknown_period(client):
    assert client.get("/api/periods/1999/recipients").status_code == 404


# -- what-if ---------------------------------------------------------------------

def test_whatif_defaults_match_persisted_run(seeded, auth):
    persisted = seeded.post("/api/periods/2013/selection", headers=auth).json()
    whatif = seeded.post(
        "/api/whatif", json={"year": 2013, "weights": [0.4, 0.3, 0.1, 0.2]}, headers=auth
    ).json()
    assert whatif["scores"] == persisted["scores"]
    assert [e["alternative"] for e in whatif["ranking"]["entries"]] == [
        e["alternative"] for e in persisted["ranking"]["entries"]
    ]
    assert whatif["run_id"] is None and whatif["timestamp"] is None


def test_whatif_override_reranks(seeded, auth):
    response = seeded.post(
        "/api/whatif", json={"year": 2013, "weights": [0.1, 0.1, 0.1, 0.7]}, headers=auth
    )
    assert response.status_code == 200
    run = response.json()
    assert run["scores"] == pytest.approx([0.72, 0.95, 0.67], abs=TOL)
    assert [e["alternative"] for e in run["ranking"]["entries"]] == [
        "0915110",
        "10145001",
        "08141156",
    ]


def test_whatif_rejects_bad_weights(seeded, auth):
    response = seeded.post(
        "/api/whatif", json={"year": 2013, "weights": [0.4, 0.3, 0.1, 0.1]}, headers=auth
    )
    assert response.status_code == 422
    assert response.json()["code"] == "invalid_weights"
    response = seeded.post(
        "/api/whatif", json={"year": 2013, "weights": [0.5, 0.5]}, headers=auth
    )
    assert response.status_code == 422


def test_whatif_leaves_store_untouched(seeded, auth, data_dir):
    seeded.post("/api/periods/2013/selection", headers=auth)
    before = snapshot_tree(data_dir)
    for weights in ([0.1, 0.1, 0.1, 0.7], [0.4, 0.3, 0.1, 0.2]):
        assert (
            seeded.post("/api/whatif", json={"year": 2013, "weights": weights}, headers=auth).status_code
            == 200
        )
    seeded.post("/api/whatif", json={"year": 2013, "weights": [0.9, 0.1, 0.1, 0.1]}, headers=auth)
    assert snapshot_tree(data_dir) == before


def test_selection_accepts_weight_override_body(seeded, auth, data_dir):
    run = seeded.post(
        "/api/periods/2013/selection",
        json={"weights": [0.1, 0.1, 0.1, 0.7]},
        headers=auth,
    ).json()
    assert run["weights"] == [0.1, 0.1, 0.1, 0.7]
    assert [e["alternative"] for e in run["ranking"]["entries"]][0] == "0915110"
    # the override is persisted with the run snapshot
    store = SelectionStore(data_dir)
    assert store.latest_run(2013).weights == (0.1, 0.1, 0.1, 0.7)
    # and invalid overrides are rejected before anything is written
    bad = seeded.post(
        "/api/periods/2013/selection", json={"weights": [0.5, 0.5]}, headers=auth
    )
    assert bad.status_code == 422
    assert len(store.run_ids(2013)) == 1


def test_whatif_quota_override(seeded, auth):
    run = seeded.post(
        "/api/whatif",
        json={"year": 2013, "weights": [0.4, 0.3, 0.1, 0.2], "quota": 1},
        headers=auth,
    ).json()
    assert len(run["recipients"]) == 1


# -- periods -----------------------------------------------------------------------

def test_period_management(client, auth):
    response = client.post(
        "/api/periods", json={"year": 2020, "kind": "prestasi", "quota": 3}, headers=auth
    )
    assert response.status_code == 201
    assert client.post(
        "/api/periods", json={"year": 2020, "kind": "prestasi"}, headers=auth
    ).status_code == 409
    response = client.patch("/api/periods/2020", json={"quota": 7}, headers=auth)
    assert response.json()["quota"] == 7
    listed = client.get("/api/periods").json()["periods"]
    assert listed == [{"year": 2020, "kind": "prestasi", "quota": 7, "status": "open", "applicants": 0}]


def test_period_invalid_transition(client, auth):
    client.post("/api/periods", json={"year": 2020, "kind": "x"}, headers=auth)
    response = client.patch("/api/periods/2020", json={"status": "closed"}, headers=auth)
    assert response.status_code == 409
    assert response.json()["code"] == "invalid_transition"


def test_two_kinds_same_year_need_disambiguation(client, auth):
    client.post("/api/periods", json={"year": 2021, "kind": "a"}, headers=auth)
    client.post("/api/periods", json={"year": 2021, "kind": "b"}, headers=auth)
    response = client.get("/api/periods/2021/recipients")
    assert response.status_code == 409
    assert response.json()["code"] == "ambiguous_period"
    assert client.get("/api/periods/2021/recipients?kind=a").status_code == 409  # no run yet
