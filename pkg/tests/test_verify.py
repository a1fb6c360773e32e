import json

import pytest

from aromatic import verify


EXPECTED_CHECKS = {
    "pre_lie_forests", "rinehart_forests", "trace_div", "novikov_laws",
    "rinehart_monomials", "transpose_partial", "transpose_delta",
    "partialbar_closed_form", "delete_free_edges", "full_trunk",
    "grafting_count", "graft_cut_count", "tuple_count",
    "coassoc_bck_aro", "coassoc_bck_cl", "coassoc_lot_aro", "coassoc_lot_cl",
    "gl_duality", "phi_morphism", "phi_delta", "jbar_partialbar",
    "embedding_aro", "embedding_cl", "commuting_square", "matching_cuts",
    "embedding_injectivity", "antipode_convolution",
}


def test_registry_is_complete():
    assert set(verify.CHECKS) == EXPECTED_CHECKS


def test_unknown_check_raises():
    with pytest.raises(ValueError):
        verify.check("nope")


def test_reports_are_deterministic():
    a = verify.check("trace_div", 3)
    b = verify.check("trace_div", 3)
    assert (a.name, a.max_degree, a.instances, a.passed) == (
        b.name, b.max_degree, b.instances, b.passed,
    )


def test_report_json_fields():
    r = verify.check("full_trunk", 3)
    rec = json.loads(r.to_json())
    assert rec == {
        "name": "full_trunk",
        "max_degree": 3,
        "instances": r.instances,
        "status": "pass",
        "counterexample": None,
    }


def test_failure_reports_carry_a_counterexample():
    def body(maxdeg, seen):
        seen()
        verify._expect(False, lambda: "lhs = a ; rhs = b")

    r = verify._run("synthetic", 1, body)
    assert not r.passed
    assert r.counterexample == "lhs = a ; rhs = b"
    assert "FAIL" in r.line() and "counterexample" in r.line()
    assert json.loads(r.to_json())["status"] == "fail"


def test_run_all_selects_names():
    reports = verify.run_all(["trace_div", "full_trunk"], 2)
    assert [r.name for r in reports] == ["trace_div", "full_trunk"]
    assert all(r.passed for r in reports)


def test_embedding_check_small_degrees():
    assert verify.check("embedding_aro", 1).passed
    assert verify.check("embedding_cl", 2).passed


def test_partialbar_closed_form_small():
    r = verify.check("partialbar_closed_form", 3)
    assert r.passed and r.instances > 0
