import random
from fractions import Fraction

import pytest

from aromatic.algebra import (
    HopfStructure,
    LinComb,
    Tensor,
    adjoint_on_slice,
    multiset_partitions,
    multiset_splittings,
    pairing,
    tensor_product,
)
from aromatic import forests as fo


def test_lincomb_drops_zeros():
    lc = LinComb({"a": 1, "b": 0})
    assert list(lc) == ["a"]
    assert not (lc - lc)
    assert (lc - lc).render() == "0"


def test_lincomb_arithmetic_is_exact():
    lc = LinComb.lift("a", Fraction(1, 3)) + LinComb.lift("a", Fraction(2, 3))
    assert lc["a"] == 1
    assert (lc * Fraction(1, 7))["a"] == Fraction(1, 7)


def test_pairing_examples():
    # single letters pair to 1, distinct elements to 0, squares to kappa!
    from aromatic.multiindices import MultiIndex

    xm1 = MultiIndex.letter(-1)
    x0 = MultiIndex.letter(0)
    sq = MultiIndex.letter(-1, None, 2)
    assert pairing(LinComb.lift(xm1), LinComb.lift(xm1)) == 1
    assert pairing(LinComb.lift(sq), LinComb.lift(sq)) == 2
    assert pairing(LinComb.lift(xm1), LinComb.lift(x0)) == 0


def test_pairing_bilinear_and_symmetric():
    rng = random.Random(7)
    basis = fo.aromatic_forests_of_order(3)

    def combo():
        return sum(
            (LinComb.lift(b, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
             for b in rng.sample(basis, 4)),
            LinComb.zero(),
        )

    for _ in range(25):
        x, y, z = combo(), combo(), combo()
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert pairing(x, y) == pairing(y, x)
        assert pairing(x + z * c, y) == pairing(x, y) + c * pairing(z, y)


def test_adjoint_of_identity_is_identity():
    for d in range(1, 5):
        slice_ = fo.aromatic_forests_of_order(d)
        g = adjoint_on_slice(lambda b: LinComb.lift(b), slice_)
        for b in slice_:
            assert g(b) == LinComb.lift(b)


def test_adjoint_of_psi_matches_combinatorial_psi_star():
    for d in range(1, 5):
        dom = fo.clumped_forests_of_order(d)
        g = adjoint_on_slice(lambda c: LinComb.lift(fo.psi(c)), dom)
        for f in fo.aromatic_forests_of_order(d):
            assert g(f) == fo.psi_star(f)


def test_adjoint_is_an_involution():
    for d in range(1, 6):
        dom = fo.clumped_forests_of_order(d)
        cod = fo.aromatic_forests_of_order(d)
        star = adjoint_on_slice(lambda c: LinComb.lift(fo.psi(c)), dom)
        back = adjoint_on_slice(star, cod)
        for c in dom:
            assert back(c) == LinComb.lift(fo.psi(c))


def test_adjoint_example_psi_star_distribution():
    # one aroma, two distinct trees -> the aroma lands in either clump
    f = fo.AromaticForest(
        (fo.Aroma((fo.LEAF,)),), (fo.LEAF, fo.RootedTree((fo.LEAF,)))
    )
    assert fo.psi_star(f).render() == "(<b> b) # (b[b]) + (<b> b[b]) # (b)"


def test_multiset_splittings_multiplicities():
    # b^2 deshuffles with binomial weight 2 on the mixed term
    splits = {(l, r): m for l, r, m in multiset_splittings(("b", "b"))}
    assert splits[(), ("b", "b")] == 1
    assert splits[("b",), ("b",)] == 2
    assert splits[("b", "b"), ()] == 1


def test_deshuffle_unit_and_primitive():
    unit = fo.AF_UNIT
    assert fo.deshuffle_aro(unit) == LinComb.lift(Tensor(unit, unit))
    b = fo.AromaticForest((), (fo.LEAF,))
    assert fo.deshuffle_aro(b) == LinComb({
        Tensor(b, unit): 1, Tensor(unit, b): 1,
    })


def test_deshuffle_coassociative_and_cocommutative():
    for d in range(0, 6):
        for x in fo.aromatic_forests_of_order(d):
            delta = fo.deshuffle_aro(x)
            flipped = LinComb({Tensor(t.right, t.left): c for t, c in delta.terms.items()})
            assert delta == flipped
            lhs = LinComb.zero()
            rhs = LinComb.zero()
            for t, c in delta.terms.items():
                for t2, c2 in fo.deshuffle_aro(t.left).terms.items():
                    lhs = lhs + LinComb.lift(Tensor(t2.left, Tensor(t2.right, t.right)), c * c2)
                for t2, c2 in fo.deshuffle_aro(t.right).terms.items():
                    rhs = rhs + LinComb.lift(Tensor(t.left, Tensor(t2.left, t2.right)), c * c2)
            assert lhs == rhs


def test_multiset_partitions_counts():
    assert len(multiset_partitions(())) == 1
    assert len(multiset_partitions(("a",))) == 1
    assert len(multiset_partitions(("a", "a"))) == 2
    assert len(multiset_partitions(("a", "b"))) == 2
    assert len(multiset_partitions(("a", "a", "b"))) == 4


def test_antipode_unit_and_primitive():
    hopf = HopfStructure("bck-aro", lambda a, b: a.mul(b), fo.bck_aro, fo.AF_UNIT)
    assert hopf.antipode_basis(fo.AF_UNIT) == LinComb.lift(fo.AF_UNIT)
    b = fo.AromaticForest((), (fo.LEAF,))
    assert hopf.antipode_basis(b) == LinComb.lift(b, -1)


def test_antipode_rejects_non_connected_input():
    hopf = HopfStructure("bck-aro", lambda a, b: a.mul(b), fo.bck_aro, fo.AF_UNIT)

    class Fake:
        degree = 0
        key = "fake"

    with pytest.raises(ValueError):
        hopf.antipode_basis(Fake())


def test_antipode_convolution_spot_check():
    hopf = HopfStructure("bck-aro", lambda a, b: a.mul(b), fo.bck_aro, fo.AF_UNIT)
    for d in range(0, 4):
        for x in fo.aromatic_forests_of_order(d):
            assert hopf.convolution_check(x)


def test_tensor_product_bilinearity():
    a = LinComb.lift("a", 2) + LinComb.lift("b", -1)
    b = LinComb.lift("c", Fraction(1, 2))
    t = tensor_product(a, b)
    assert t[Tensor("a", "c")] == 1
    assert t[Tensor("b", "c")] == Fraction(-1, 2)
