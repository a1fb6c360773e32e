import pytest

from aromatic.algebra import LinComb
from aromatic import forests as fo
from aromatic import multiindices as mi
from aromatic.grammar import ParseError, parse, parse_element


def test_tree_round_trip():
    for text in ("b", "b[b]", "b[b,b[b]]", "b!2", "b[b!1,b[b]]"):
        assert parse_element("tree", text).key == text


def test_aroma_canonicalizes_rotation():
    assert parse_element("aroma", "<b[b],b>").key == "<b,b[b]>"


def test_round_trip_on_enumerated_bases():
    for d in range(0, 4):
        for f in fo.aromatic_forests_of_order(d):
            assert parse_element("forest", f.key) == f
        for c in fo.clumped_forests_of_order(d):
            assert parse_element("clumped", c.key) == c
        for x in mi.ami_of_degree(d):
            assert parse_element("ami", x.key) == x
        for x in mi.cmi_of_degree(d):
            assert parse_element("cmi", x.key) == x


def test_lincomb_round_trip():
    for kind, text in (
        ("forest", "2 b[b,b[b]] + b[b[b,b]]"),
        ("forest", "-b + 1/2 b[b]"),
        ("clumped", "(<b> b) # (b[b]) + (<b> b[b]) # (b)"),
        ("ami", "x(-1)^2 x(1) + 3 x(0) . x(-1)"),
    ):
        lc = parse(kind, text)
        assert parse(kind, lc.render()) == lc
        assert lc.render() == text


def test_coefficients_and_units():
    assert parse("forest", "1").render() == "1"
    assert parse("forest", "2").render() == "2 1"
    assert parse("forest", "3/2").render() == "3/2 1"
    assert parse("forest", "2 1 + b").render() == "2 1 + b"
    assert parse("ami", "1 + x(-1)").render() == "1 + x(-1)"


def test_colored_vertices_and_letters():
    t = parse_element("tree", "b:r[b:g]", colors=("r", "g"))
    assert t.key == "b:r[b:g]"
    m = parse_element("monomial", "x(0,r)^2", colors=("r",))
    assert m.key == "x(0,r)^2"


def test_unknown_color_is_rejected():
    with pytest.raises(ParseError) as err:
        parse_element("tree", "b:purple", colors=("r",))
    assert "unknown color" in str(err.value)


def test_error_positions_are_columns():
    with pytest.raises(ParseError) as err:
        parse_element("forest", "b[b")
    assert "column 4" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_element("ami", "x(0) . x(1)")
    assert "weight 1" in str(err.value)


def test_trailing_garbage_is_rejected():
    with pytest.raises(ParseError):
        parse_element("tree", "b]")
    with pytest.raises(ParseError):
        parse("forest", "b b ++ b")


def test_zero_denominator_rejected():
    with pytest.raises(ParseError):
        parse("forest", "1/0 b")


def test_ami_slot_assignment_by_weight():
    x = parse_element("ami", "x(-1) . x(0) . x(-1) x(0)")
    assert [m.key for m in x.aromas] == ["x(0)"]
    assert [m.key for m in x.roots] == ["x(-1)", "x(-1) x(0)"]


def test_kinds_without_unit_reject_bare_numbers():
    with pytest.raises(ParseError):
        parse("tree", "2")


def test_render_zero():
    assert LinComb.zero().render() == "0"
