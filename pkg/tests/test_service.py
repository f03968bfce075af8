"""Service endpoints: schemas, verdicts, and error mapping."""
from fastapi.testclient import TestClient

from qcliff import SCHEMA_VERSION
from qcliff.service.app import app

client = TestClient(app)


def test_health():
    resp = client.get("/api/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["schema_version"] == SCHEMA_VERSION


def test_suite_endpoint_roundtrip():
    resp = client.post("/api/suite", json={"suite": "clifford", "n": 4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["kind"] == "suite" and body["ok"]
    assert set(body["payload"]["suites"]) == {"clifford"}


def test_suite_rejects_unknown_name():
    resp = client.post("/api/suite", json={"suite": "nonsense", "n": 3})
    assert resp.status_code == 422


def test_suite_rejects_small_n():
    resp = client.post("/api/suite", json={"suite": "all", "n": 1})
    assert resp.status_code == 422


def test_gens_payload_shape():
    resp = client.post("/api/gens", json={"n": 3, "m": 4})
    body = resp.json()
    assert resp.status_code == 200 and body["ok"]
    gens = body["payload"]["generators"]
    assert len(gens) == 4
    assert set(gens[0]) == {"scalar", "factors"}
    assert gens[0]["factors"]["0"]["perm"] == [0, 1, 2]


def test_qdet_bound_and_unbound():
    ok = client.post("/api/qdet", json={"n": 3, "coeffs": ["1", "2", "3", "6"]}).json()
    assert ok["ok"] and ok["payload"]["vanishes"] and ok["payload"]["centrality_vacuous"]
    bad = client.post("/api/qdet", json={"n": 3, "coeffs": ["1", "1", "1", "2"]}).json()
    assert not bad["ok"] and not bad["payload"]["forms_agree"]


def test_power_endpoint():
    resp = client.post("/api/power", json={"n": 5, "coeffs": ["1", "2", "3", "6"], "k": 3})
    body = resp.json()
    assert body["ok"] and body["payload"]["k"] == 3


def test_plane_and_symplectic_verdicts():
    good = {"n": 3, "coeffs": ["1", "2", "3", "6"]}
    bad = {"n": 3, "coeffs": ["1", "2", "3", "5"]}
    assert client.post("/api/plane", json=good).json()["ok"]
    assert not client.post("/api/plane", json=bad).json()["ok"]
    assert client.post("/api/symplectic", json=good).json()["ok"]
    assert not client.post("/api/symplectic", json=bad).json()["ok"]


def test_coeff_validation():
    resp = client.post("/api/qdet", json={"n": 3, "coeffs": ["1", "2"]})
    assert resp.status_code == 422
    resp = client.post("/api/qdet", json={"n": 3, "coeffs": ["1", "2", "x", "6"]})
    assert resp.status_code == 422


def test_investigate_endpoint():
    resp = client.post("/api/investigate", json={"n": 3})
    body = resp.json()
    assert body["ok"]
    finding_ids = {f["id"] for f in body["payload"]["findings"]}
    assert "alternative_diagonal_closure" in finding_ids


def test_su2_endpoint_and_degenerate_flag():
    resp = client.post("/api/su2", json={"two_j": 10, "q": "1/2"})
    body = resp.json()
    assert body["ok"] and body["payload"]["max_residual"] < 1e-10
    deg = client.post("/api/su2", json={"two_j": 4, "q": "omega:3"}).json()
    assert deg["ok"] and deg["payload"]["degenerate"]


def test_weyl_endpoint_reports_discrepancy():
    body = client.post("/api/weyl", json={"n": 2}).json()
    assert body["ok"]
    assert body["payload"]["diagonal_discrepancy"] == 0.5


def test_expr_endpoint_verdicts_and_errors():
    holds = client.post("/api/expr", json={"text": "b*c == c*b", "n": 3}).json()
    assert holds["ok"] and holds["payload"]["holds"]
    fails = client.post("/api/expr", json={"text": "a*b == b*a", "n": 3}).json()
    assert not fails["ok"]
    syntax = client.post("/api/expr", json={"text": "a*(b", "n": 3})
    assert syntax.status_code == 422
    assert "offset 4" in syntax.json()["detail"]


def test_expr_backend_mismatch_is_422():
    resp = client.post(
        "/api/expr", json={"text": "g1*g2 == w*g2*g1", "n": 3, "backend": "symbolic"}
    )
    assert resp.status_code == 422
