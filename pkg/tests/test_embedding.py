from fractions import Fraction

import pytest

from aromatic.algebra import LinComb, pairing
from aromatic import embedding as emb
from aromatic import forests as fo
from aromatic import multiindices as mi
from aromatic.grammar import parse_element


def M(text):
    return parse_element("monomial", text)


# -- fertility map -------------------------------------------------------------


def test_phi_on_trees():
    assert emb.phi(parse_element("tree", "b")).key == "x(-1)"
    assert emb.phi(parse_element("tree", "b[b,b]")).key == "x(-1)^2 x(1)"
    assert emb.phi(parse_element("tree", "b[b]")).key == "x(-1) x(0)"


def test_phi_weight_bookkeeping():
    for n in range(1, 5):
        for t in fo.trees_of_order(n):
            p = emb.phi(t)
            assert p.weight == -1 and p.degree == n
        for a in fo.aromas_of_order(n):
            p = emb.phi(a)
            assert p.weight == 0 and p.degree == n


def test_phi_with_free_edges():
    # 3-cycle with one and two free edges on its vertices
    a = parse_element("aroma", "<b,b!1,b!2>")
    assert emb.phi(a).key == "x(0) x(1) x(2)"
    t = parse_element("tree", "b!1[b[b[b!1]]]")
    assert emb.phi(t).weight == t.free_total - 1


def test_phi_on_forests_and_clumps():
    f = parse_element("forest", "<b> b b[b]")
    p = emb.phi(f)
    assert p.key == "x(0) . x(-1) . x(-1) x(0)"
    c = parse_element("clumped", "(x) # (x)".replace("x", "b"))
    assert emb.phi(c).key == "(x(-1)) # (x(-1))"


# -- inverse fertility ----------------------------------------------------------


def test_inverse_fertility_single_letter():
    objs = emb.inverse_fertility(M("x(-1)"), "tree")
    assert [(o.key, s) for o, s in objs] == [("b", 1)]


def test_inverse_fertility_two_tree_preimages():
    objs = emb.inverse_fertility(M("x(-1)^2 x(0) x(1)"), "tree")
    assert [o.key for o, _ in objs] == ["b[b,b[b]]", "b[b[b,b]]"]


def test_inverse_fertility_two_aroma_preimages():
    objs = emb.inverse_fertility(M("x(-1)^2 x(1)^2"), "aroma")
    assert [o.key for o, _ in objs] == ["<b[b[b,b]]>", "<b[b],b[b]>"]
    assert [s for _, s in objs] == [2, 2]


def test_inverse_fertility_matches_phi():
    for d in range(1, 6):
        for m in mi.m_minus1_of_degree(d):
            for obj, s in emb.inverse_fertility(m, "tree"):
                assert emb.phi(obj) == m
                assert s == obj.sigma()
        for m in mi.m0_of_degree(d):
            for obj, _ in emb.inverse_fertility(m, "aroma"):
                assert emb.phi(obj) == m


def test_inverse_fertility_complete_against_enumeration():
    # every tree/aroma of order <= 5 appears in the preimage of its profile
    for n in range(1, 6):
        for t in fo.trees_of_order(n):
            objs = [o for o, _ in emb.inverse_fertility(emb.phi(t), "tree")]
            assert t in objs
        for a in fo.aromas_of_order(n):
            objs = [o for o, _ in emb.inverse_fertility(emb.phi(a), "aroma")]
            assert a in objs


# -- the embeddings --------------------------------------------------------------


def test_j_paper_tree_examples():
    assert emb.j_aro(M("x(-1) x(0)")).render() == "b[b]"
    assert emb.j_aro(M("x(-1)^2 x(1)")).render() == "b[b,b]"
    assert emb.j_aro(M("x(-1)^2 x(0) x(1)")).render() == "2 b[b,b[b]] + b[b[b,b]]"


def test_j_morphism_on_products():
    out = emb.j_aro(parse_element("ami", "x(0) . x(-1)"))
    assert out.render() == "<b> b"


def test_j_weight_validation():
    with pytest.raises(ValueError):
        emb.j_aro(M("x(1)"))


def test_j_coefficients_are_integers():
    for d in range(1, 6):
        for m in mi.m0_of_degree(d):
            for _, c in emb.j_aro(m).terms.items():
                assert c.denominator == 1, (m, c)
        for m in mi.m_minus1_of_degree(d):
            for _, c in emb.j_aro(m).terms.items():
                assert c.denominator == 1, (m, c)


def test_adjunction_pairing_order_5():
    # <Phi(a), x^kappa> = <a, j(x^kappa)> for every tree and aroma of order <= 5
    for n in range(1, 6):
        for t in fo.trees_of_order(n):
            m = emb.phi(t)
            for m2 in mi.m_minus1_of_degree(n):
                lhs = pairing(LinComb.lift(m), LinComb.lift(m2))
                rhs = pairing(LinComb.lift(t), emb.j_aro(m2))
                assert lhs == rhs, (t, m2)
        for a in fo.aromas_of_order(n):
            m = emb.phi(a)
            for m2 in mi.m0_of_degree(n):
                lhs = pairing(LinComb.lift(m), LinComb.lift(m2))
                rhs = pairing(LinComb.lift(a), emb.j_aro(m2))
                assert lhs == rhs, (a, m2)


def test_j_bar_examples_and_derived_coefficients():
    out = emb.j_bar(M("x(1)^3"), "aroma")
    assert out.render() == "2 <b!1,b!1,b!1> + 6 <b!1,b[b!2]> + 6 <b[b!1[b!2]]>"
    sym = emb.j_bar(M("x(-1)^2 x(1)^2"), "aroma")
    assert sym.render() == "2 <b[b[b,b]]> + 2 <b[b],b[b]>"


def test_j_bar_zero_below_feasible_weight():
    assert emb.j_bar(M("x(-1)"), "aroma") == LinComb.zero()
    assert emb.j_bar(M("x(-1)^2"), "tree") == LinComb.zero()
    with pytest.raises(ValueError):
        emb.j_bar(M("x(0)"), "flower")


def test_j_cl_single_clump():
    c = parse_element("cmi", "(x(0) . x(-1))")
    assert emb.j_cl(c).render() == "(<b> b)"


def test_j_cl_against_commuting_square_spot():
    x = parse_element("ami", "x(0) . x(-1) . x(-1)")
    lhs = mi.phi_star(x).apply(emb.j_cl)
    rhs = emb.j_aro(x).apply(fo.psi_star)
    assert lhs == rhs


def test_embedding_identity_spot():
    from aromatic.algebra import tensor_product

    x = mi.AromaticMI((M("x(-1)^2 x(1)^2"),), ())
    lhs = LinComb.zero()
    for t, c in mi.lot_aro(x).terms.items():
        lhs = lhs + tensor_product(emb.j_aro(t.left), emb.j_aro(t.right)) * c
    rhs = emb.j_aro(x).apply(fo.bck_aro)
    assert lhs == rhs
