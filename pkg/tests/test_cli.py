import json

import pytest

from aromatic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.rstrip("\n"), out.err


def test_graft(capsys):
    code, out, _ = run(capsys, "graft", "b", "<b> b")
    assert code == 0
    assert out == "<b> b[b] + <b[b]> b"


def test_div(capsys):
    code, out, _ = run(capsys, "div", "b[b[b,b]]")
    assert (code, out) == (0, "2 <b,b,b[b]> + <b,b[b,b]> + <b[b[b,b]]>")


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "b!1[b]")
    assert (code, out) == (0, "<b[b]>")


def test_sigma_on_forest_and_monomial(capsys):
    assert run(capsys, "sigma", "<b[b],b[b]>")[:2] == (0, "2")
    assert run(capsys, "sigma", "x(-1)^2 x(1)^2")[:2] == (0, "4")
    assert run(capsys, "sigma", "(<b> b) # (<b> b)")[:2] == (0, "2")


def test_coproducts(capsys):
    code, out, _ = run(capsys, "bck-aro", "b[b]")
    assert (code, out) == (0, "1 (x) b[b] + b (x) b + b[b] (x) 1")
    code, out, _ = run(capsys, "lot-aro", "x(-1) x(0)")
    assert code == 0
    assert "x(-1) (x) x(-1)" in out
    code, out, _ = run(capsys, "bck-cl", "(b[b])")
    assert (code, out) == (0, "(b) (x) (b) + (b[b]) (x) 1 + 1 (x) (b[b])")
    code, out, _ = run(capsys, "lot-cl", "(x(-1) x(0))")
    assert (code, out) == (0, "(x(-1) x(0)) (x) 1 + (x(-1)) (x) (x(-1)) + 1 (x) (x(-1) x(0))")


def test_gl_both_flavors(capsys):
    assert run(capsys, "gl", "b", "b")[:2] == (0, "b b + b[b]")
    code, out, _ = run(capsys, "gl", "(b)", "(b)")
    assert code == 0
    assert out == "(b) # (b) + (b[b])"
    code, _, err = run(capsys, "gl", "(b)", "b")
    assert code == 2 and "flavor" in err


def test_psi_and_phi_star(capsys):
    assert run(capsys, "psi-star", "<b> b b[b]")[:2] == (
        0,
        "(<b> b) # (b[b]) + (<b> b[b]) # (b)",
    )
    assert run(capsys, "phi-star", "x(0) . x(-1) . x(-1)")[:2] == (
        0,
        "2 (x(-1)) # (x(0) . x(-1))",
    )


def test_phi(capsys):
    assert run(capsys, "phi", "b[b,b]")[:2] == (0, "x(-1)^2 x(1)")
    assert run(capsys, "phi", "(<b> b) # (b)")[:2] == (0, "(x(-1)) # (x(0) . x(-1))")


def test_embeddings(capsys):
    assert run(capsys, "embed-aro", "x(-1) x(0)")[:2] == (0, "b[b]")
    assert run(capsys, "embed-aro", "x(0) . x(-1)")[:2] == (0, "<b> b")
    assert run(capsys, "embed-cl", "(x(0) . x(-1))")[:2] == (0, "(<b> b)")
    code, out, _ = run(capsys, "embed-bar", "x(1)^3", "--kind", "aroma")
    assert (code, out) == (0, "2 <b!1,b!1,b!1> + 6 <b!1,b[b!2]> + 6 <b[b!1[b!2]]>")


def test_embed_weight_error_reports_weight(capsys):
    code, _, err = run(capsys, "embed-aro", "x(1)")
    assert code == 2
    assert "weight 1" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "tree", "--order", "3")
    assert code == 0
    assert out.splitlines() == ["b[b,b]", "b[b[b]]"]


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "aroma", "--order", "2", "--json")
    assert code == 0
    assert json.loads(out) == ["<b,b>", "<b[b]>"]


def test_antipode(capsys):
    assert run(capsys, "antipode", "b[b]", "--coproduct", "bck-aro")[:2] == (
        0,
        "b b - b[b]",
    )
    assert run(capsys, "antipode", "x(-1)", "--coproduct", "lot-aro")[:2] == (0, "-x(-1)")


def test_json_output_is_a_flat_term_map(capsys):
    code, out, _ = run(capsys, "embed-aro", "x(-1)^2 x(0) x(1)", "--json")
    assert code == 0
    assert json.loads(out) == {"b[b,b[b]]": "2", "b[b[b,b]]": "1"}
    code, out, _ = run(capsys, "antipode", "b[b]", "--coproduct", "bck-aro", "--json")
    assert code == 0
    assert json.loads(out) == {"b b": "1", "b[b]": "-1"}


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "div", "b[b")
    assert code == 2
    assert "parse error" in err


def test_golden_match_and_mismatch(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text("b[b]\n", encoding="utf-8")
    assert run(capsys, "embed-aro", "x(-1) x(0)", "--golden", str(good))[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("b[b,b]\n", encoding="utf-8")
    code, _, err = run(capsys, "embed-aro", "x(-1) x(0)", "--golden", str(bad))
    assert code == 3
    assert "golden mismatch" in err


def test_colors_flag(capsys):
    code, out, _ = run(capsys, "sigma", "b:r[b:r,b:r]", "--colors", "r,g")
    assert (code, out) == (0, "2")
    code, _, err = run(capsys, "sigma", "b:r", "--colors", "g")
    assert code == 2 and "unknown color" in err
    code, out, _ = run(capsys, "enumerate", "--kind", "tree", "--order", "2", "--colors", "r,g")
    assert code == 0 and len(out.splitlines()) == 4


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "trace_div", "--max-order", "3")
    assert code == 0
    assert out.startswith("pass  trace_div")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "full_trunk", "--max-order", "3", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["name"] == "full_trunk" and rec["status"] == "pass"


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--checks", "bogus")
    assert code == 2 and "unknown check" in err
