import json

import pytest

from conftest import field
from subsum.solvers import Budget
from subsum.verify import DEFAULT_GRID, KNOWN_DEFECTS, Claim, VerificationReport, parse_grid, verify_case, verify_grid


@pytest.fixture(scope="module")
def report():
    return verify_grid(DEFAULT_GRID)


def statuses(case):
    return {c.name: c.status for c in case.claims}


def test_gf2_cube_statuses(report):
    case = next(c for c in report.cases if (c.n, c.q) == (3, 2))
    s = statuses(case)
    for name in ["order", "clique_number", "chromatic_number", "domination_number", "eulerian", "edge_connectivity", "perfect"]:
        assert s[name] == "PASS", name
    assert s["degree_formula_paper.k2"] == "DISCREPANCY"
    claim = case.claim("degree_formula_paper.k2")
    assert (claim.predicted, claim.computed) == (6, 10)
    assert s["degree_formula_candidate.k2"] == "PASS"


def test_triangle_graph_statuses(report):
    case = next(c for c in report.cases if (c.n, c.q) == (2, 3))
    s = statuses(case)
    assert s["complete"] == "PASS" and s["eulerian"] == "PASS"
    assert case.claim("eulerian").computed is False
    assert s["domination_number"] == "N/A" and case.claim("domination_number").computed == 1
    assert s["perfect"] == "N/A"


def test_gf2_four_space_statuses(report):
    case = next(c for c in report.cases if (c.n, c.q) == (4, 2))
    assert case.claim("perfect").status == "PASS"
    assert case.claim("perfect").witness["odd_hole"]
    c5 = case.claim("paper_c5_witness")
    assert c5.status == "DISCREPANCY" and c5.witness["chords"] == [[2, 5]]
    assert case.claim("independent_set_even").witness["size"] == 22
    assert case.claim("independence_number").computed == 22


def test_same_claim_names_everywhere(report):
    names = [sorted(c.name.split(".")[0] for c in case.claims if "." not in c.name) for case in report.cases]
    assert all(n == names[0] for n in names)
    for case in report.cases:
        assert [c.name for c in case.claims] == sorted(c.name for c in case.claims)
        assert all(c.status in ("PASS", "DISCREPANCY", "N/A") for c in case.claims)


def test_only_known_defects_are_discrepancies(report):
    bad = [c.name for c in report.all_claims() if c.status == "DISCREPANCY" and c.blocking]
    assert bad == []
    assert report.exit_code() == 0 and report.exit_code(strict=True) == 0
    assert report.cross_checks[0].name == "fingerprints_distinct" and report.cross_checks[0].status == "PASS"


def test_exit_codes():
    r = VerificationReport()
    assert r.exit_code() == 0
    r.cross_checks.append(Claim("x", 1, 2, "DISCREPANCY"))
    assert r.exit_code() == 0 and r.exit_code(strict=True) == 2
    r.cross_checks.append(Claim("degree_formula_paper.k2", 1, 2, "DISCREPANCY"))
    assert not r.cross_checks[1].blocking
    r.cross_checks.append(Claim("handshake", True, False, "FAIL"))
    assert r.exit_code() == 1
    assert "hamiltonian" in KNOWN_DEFECTS


def test_empty_and_single_grid():
    assert verify_grid([]).to_json() == {"version": 1, "grid": [], "cross_checks": []}
    single = verify_grid([(3, 2)])
    direct = verify_case(field(2), 3)
    assert single.cases[0].to_json() == direct.to_json()


def test_budget_exhaustion_becomes_unknown():
    case = verify_case(field(3), 3, budget=Budget(nodes=5))
    assert "UNKNOWN" in {c.status for c in case.claims}
    unknown = [c for c in case.claims if c.status == "UNKNOWN"]
    assert all(c.note for c in unknown)


def test_report_is_deterministic_and_threads_do_not_matter(report):
    again = verify_grid(DEFAULT_GRID, threads=3)
    assert report.dumps() == again.dumps()
    data = json.loads(report.dumps())
    assert data["version"] == 1
    assert [[c["n"], c["q"]] for c in data["grid"]] == [[2, 2], [2, 3], [3, 2], [3, 3], [4, 2]]
    assert all(cl["ms"] is None for c in data["grid"] for cl in c["claims"])


def test_timings_are_opt_in():
    case = verify_case(field(2), 2, timings=True)
    assert all(isinstance(c.ms, int) for c in case.claims)


def test_parse_grid():
    assert parse_grid("default") == list(DEFAULT_GRID)
    assert parse_grid("3:2, 2:5") == [(3, 2), (2, 5)]
    assert parse_grid("") == []
    with pytest.raises(ValueError):
        parse_grid("3-2")
