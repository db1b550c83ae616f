"""HTTP surface of the service: schemas, status codes, handler wiring."""

import pytest
from fastapi.testclient import TestClient

from rfishburn.service import app

client = TestClient(app)


class TestHealth:
    def test_health(self):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok"}


class TestXiEndpoint:
    def test_small_table(self):
        resp = client.post("/xi", json={"r": 1, "n": 5})
        assert resp.status_code == 200
        body = resp.json()
        assert body["values"] == ["1", "1", "2", "5", "15", "53"]
        assert body["r"] == 1
        assert body["n"] == 5
        assert body["check_passed"] is None

    def test_values_travel_as_decimal_strings(self):
        resp = client.post("/xi", json={"r": -1, "n": 6})
        assert all(isinstance(v, str) for v in resp.json()["values"])
        assert resp.json()["values"][1] == "-1"

    def test_cross_check_route(self):
        resp = client.post("/xi", json={"r": 1, "n": 20, "check": True})
        body = resp.json()
        assert body["check_passed"] is True
        assert body["check_range"] == 20

    def test_cross_check_needs_unit_r(self):
        resp = client.post("/xi", json={"r": 2, "n": 10, "check": True})
        assert resp.status_code == 400

    def test_zero_r_is_usage_error(self):
        resp = client.post("/xi", json={"r": 0, "n": 5})
        assert resp.status_code == 400

    def test_negative_n_fails_validation(self):
        resp = client.post("/xi", json={"r": 1, "n": -3})
        assert resp.status_code == 422


class TestSetsEndpoint:
    def test_large_shifted_case(self):
        resp = client.post("/sets", json={"p": 43, "r": -1, "s": 2})
        assert resp.status_code == 200
        body = resp.json()
        assert body["t_star"] == [42]
        assert len(body["s_star"]) == 21
        assert body["t_star_vacuous"] is False

    def test_plain_sets_included(self):
        body = client.post("/sets", json={"p": 5}).json()
        assert body["s_set"] == [0, 1, 2]
        assert body["t_set"] == [3, 4]

    def test_composite_modulus_rejected(self):
        assert client.post("/sets", json={"p": 6}).status_code == 400


class TestVerifyEndpoint:
    def test_theorem_scope_single_residue(self):
        resp = client.post(
            "/verify",
            json={"scope": "theorem", "p": 5, "r": 1, "s": 0, "m": 4, "nmax": 100},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["passed"] is True
        assert len(body["results"]) == 1
        claim = body["results"][0]
        assert claim["passed"] is True
        assert claim["witnesses"] > 0
        assert claim["counterexample"] is None

    def test_theorem_scope_sweeps_t_star(self):
        body = client.post(
            "/verify", json={"scope": "theorem", "p": 5, "nmax": 100}
        ).json()
        assert len(body["results"]) == 2  # T*(5,1,0) = {3, 4}
        assert body["passed"] is True

    def test_forced_residue_fails_cleanly(self):
        resp = client.post(
            "/verify",
            json={"scope": "theorem", "p": 5, "m": 2, "nmax": 50, "force": True},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["passed"] is False
        assert body["results"][0]["counterexample"] is not None

    def test_unforced_residue_outside_t_star_is_usage_error(self):
        resp = client.post(
            "/verify", json={"scope": "theorem", "p": 5, "m": 2, "nmax": 50}
        )
        assert resp.status_code == 400

    def test_corollary_scope(self):
        body = client.post(
            "/verify", json={"scope": "corollary", "p": 7, "nmax": 150}
        ).json()
        assert body["passed"] is True
        # one structural claim plus (p+1)/2 relation checks
        assert len(body["results"]) == 1 + 4

    def test_dissection_scope(self):
        body = client.post(
            "/verify", json={"scope": "dissection", "p": 5, "n": 3}
        ).json()
        assert body["passed"] is True
        # alpha identity, vanishing, stability, gamma per residue, inversion
        assert len(body["results"]) == 3 + 5 + 1

    def test_bad_modulus(self):
        assert client.post("/verify", json={"p": 4}).status_code == 400


class TestRelationsEndpoint:
    def test_small_space(self):
        resp = client.post(
            "/relations", json={"p": 5, "r": 1, "rows": 10, "nmax": 100}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["dimension"] == 3
        assert body["conjectured_dimension"] == 3
        assert body["dimension_matches_conjecture"] is True
        assert body["stabilized"] is False  # 10 rows cannot cover a 20-row window
        assert body["family_in_space"] is True
        assert len(body["basis"]) == 3
        assert all(len(vec["coeffs"]) == 5 for vec in body["basis"])
        assert body["known"][0]["holds"] is True
        assert body["known"][0]["in_space"] is True

    def test_insufficient_table_is_usage_error(self):
        resp = client.post(
            "/relations", json={"p": 5, "r": 1, "rows": 30, "nmax": 100}
        )
        assert resp.status_code == 400

    def test_default_nmax_adapts_to_rows(self):
        body = client.post("/relations", json={"p": 7, "rows": 12}).json()
        assert body["nmax"] == 500  # default covers 12 rows comfortably
        assert body["rows_used"] == 12
