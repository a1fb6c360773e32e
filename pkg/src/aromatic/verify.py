"""Degree-bounded exhaustive verification of every identity in scope.

Each registered check iterates over a complete basis slice (or all tuples
from slices) up to its degree bound, compares both sides of one identity
exactly, and returns a :class:`Report`.  A failing report always carries a
counterexample rendered in the shared text grammar.  Checks are independent
and deterministic; failures are data, not exceptions.

Default bounds follow the acceptance criteria: 5 for unary identities,
4 for coproduct/embedding identities, 3 for triple-quantified ones.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction

from . import embedding as emb
from . import forests as fo
from . import multiindices as mi
from .algebra import (
    HopfStructure,
    LinComb,
    Tensor,
    bilinear,
    multiset_sigma,
    pairing,
    tensor_product,
)


@dataclass(frozen=True)
class Report:
    name: str
    max_degree: int
    instances: int
    passed: bool
    counterexample: str | None = None
    seconds: float = 0.0

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "max_degree": self.max_degree,
                "instances": self.instances,
                "status": "pass" if self.passed else "fail",
                "counterexample": self.counterexample,
            },
            sort_keys=True,
        )

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        out = f"{status}  {self.name} (degree <= {self.max_degree}, {self.instances} instances)"
        if self.counterexample:
            out += f"\n      counterexample: {self.counterexample}"
        return out


class _Failure(Exception):
    def __init__(self, text: str):
        self.text = text


def _expect(cond: bool, describe) -> None:
    if not cond:
        raise _Failure(describe())


def _run(name: str, maxdeg: int, body) -> Report:
    start = time.monotonic()
    counter = [0]

    def seen() -> None:
        counter[0] += 1

    try:
        body(maxdeg, seen)
    except _Failure as f:
        return Report(name, maxdeg, counter[0], False, f.text, time.monotonic() - start)
    return Report(name, maxdeg, counter[0], True, None, time.monotonic() - start)


def _eq(lhs: LinComb, rhs: LinComb, label: str):
    _expect(lhs == rhs, lambda: f"{label}: lhs = {lhs.render()} ; rhs = {rhs.render()}")


# ---------------------------------------------------------------------------
# Forest-side identities.


def _aromatic_trees_upto(n: int):
    for d in range(1, n + 1):
        yield from fo.aromatic_trees_of_order(d)


def _check_pre_lie_forests(maxdeg: int, seen) -> None:
    g = bilinear(fo.graft)
    for x in _aromatic_trees_upto(maxdeg - 2):
        for y in _aromatic_trees_upto(maxdeg - 1 - x.order):
            for z in _aromatic_trees_upto(maxdeg - x.order - y.order):
                seen()
                lx, ly, lz = (LinComb.lift(v) for v in (x, y, z))
                lhs = g(lx, g(ly, lz)) - g(g(lx, ly), lz)
                rhs = g(ly, g(lx, lz)) - g(g(ly, lx), lz)
                _eq(lhs, rhs, f"pre-Lie on ({x}, {y}, {z})")


def _check_rinehart_forests(maxdeg: int, seen) -> None:
    g = bilinear(fo.graft)

    def bracket(a: LinComb, b: LinComb) -> LinComb:
        return g(a, b) - g(b, a)

    for x in _aromatic_trees_upto(maxdeg - 2):
        for ad in range(1, maxdeg - x.order):
            for aromas in fo.multiaromas_of_order(ad):
                a = fo.AromaticForest(aromas, ())
                for y in _aromatic_trees_upto(maxdeg - x.order - ad):
                    seen()
                    ay = y.mul(a)
                    lhs = bracket(LinComb.lift(x), LinComb.lift(ay))
                    rhs = fo.anchor_forest(x, a).map_keys(lambda f: f.mul(y))
                    rhs = rhs + bracket(LinComb.lift(x), LinComb.lift(y)).map_keys(
                        lambda f: f.mul(a)
                    )
                    _eq(lhs, rhs, f"Rinehart-Leibniz on ({x}, {a}, {y})")


def _check_trace_div(maxdeg: int, seen) -> None:
    for x in _aromatic_trees_upto(maxdeg):
        seen()
        lhs = fo.divergence(x)
        rhs = fo.delta_free(x).apply(fo.trace)
        _eq(lhs, rhs, f"d = t.delta on {x}")


def _check_transpose_delta(maxdeg: int, seen) -> None:
    for kind in ("tree", "aroma"):
        for n in range(1, maxdeg + 1):
            for q in range(0, min(2, maxdeg - n) + 1):
                lo = fo.free_edge_objects(n, q, kind)
                hi = fo.free_edge_objects(n, q + 1, kind)
                for x in lo:
                    dx = fo.delta_free(x)
                    for y in hi:
                        seen()
                        lhs = pairing(dx, LinComb.lift(y))
                        rhs = pairing(LinComb.lift(x), fo.deltabar_free(y))
                        _expect(
                            lhs == rhs,
                            lambda: f"<delta {x}, {y}> = {lhs} but <{x}, deltabar {y}> = {rhs}",
                        )


def _check_delete_free_edges(maxdeg: int, seen) -> None:
    for n in range(1, maxdeg + 1):
        for base in fo.aromatic_trees_of_order(n):
            for r in range(1, 4):
                for x in fo.with_free_edges(base, r):
                    seen()
                    acc = LinComb.lift(x)
                    for _ in range(r):
                        acc = acc.apply(fo.deltabar_free)
                    _eq(
                        acc,
                        LinComb.lift(base, fo.norm_free(x)),
                        f"deltabar^{r} on {x}",
                    )


def _check_full_trunk(maxdeg: int, seen) -> None:
    for x in _aromatic_trees_upto(maxdeg):
        for pieces, trunk, full in fo.forest_cuts(x):
            seen()
            r = len(pieces)
            acc = LinComb.lift(full)
            for _ in range(r):
                acc = acc.apply(fo.deltabar_free)
            _eq(
                acc,
                LinComb.lift(trunk, fo.norm_free(full)),
                f"full trunk of {x} with pieces {[p.key for p in pieces]}",
            )


def _check_grafting_count(maxdeg: int, seen) -> None:
    for n in range(1, maxdeg + 1):
        for base in fo.aromatic_trees_of_order(n):
            for r in range(1, min(3, maxdeg) + 1):
                for abar in fo.with_free_edges(base, r):
                    for total in range(r, maxdeg + 1):
                        for forest in fo.tree_forests_of_order(total):
                            if len(forest) != r:
                                continue
                            seen()
                            count = len(fo.graftings(forest, abar))
                            _expect(
                                count == fo.norm_free(abar),
                                lambda: f"|G({forest}, {abar})| = {count} != {fo.norm_free(abar)}",
                            )


def _check_graft_cut_count(maxdeg: int, seen) -> None:
    # Any grafting of A onto abar that produces a cuts a back into (A, abar),
    # so quantifying over the cut-derived pairs covers every pair where either
    # side of the identity is nonzero.
    objs: list = []
    for n in range(1, maxdeg + 1):
        objs.extend(fo.aromas_of_order(n))
        objs.extend(fo.aromatic_trees_of_order(n))
    for a in objs:
        cuts = fo.admissible_cuts(a)
        pairs: dict = {}
        for pieces, _, full in cuts:
            key = (tuple(sorted(p.key for p in pieces)), full)
            entry = pairs.setdefault(key, [0, tuple(sorted(pieces, key=lambda t: t.key))])
            entry[0] += 1
        for (piece_keys, abar), (n_cuts, forest) in pairs.items():
            if not piece_keys:
                continue
            seen()
            n_graft = sum(1 for res in fo.graftings(forest, abar) if res == a)
            sigma_a = a.sigma()
            sigma_f = multiset_sigma(forest)
            sigma_abar = abar.sigma()
            _expect(
                n_cuts * sigma_f * sigma_abar == sigma_a * n_graft,
                lambda: (
                    f"|C|={n_cuts}, sigma(A)={sigma_f}, sigma(abar)={sigma_abar}, "
                    f"sigma(a)={sigma_a}, |G|={n_graft} for a={a}, A={forest}, abar={abar}"
                ),
            )


def _phi_clump(c: fo.AromaticForest) -> mi.AromaticMI:
    return mi.AromaticMI(
        tuple(emb.phi(a) for a in c.aromas), (emb.phi(c.trees[0]),)
    )


def _check_tuple_count(maxdeg: int, seen) -> None:
    import itertools as it

    for d in range(1, maxdeg + 1):
        for f in fo.clumped_forests_of_order(d):
            seen()
            m = emb.phi(f)
            target = m.clumps  # one fixed ordering of the monomial factors
            count = sum(
                1
                for perm in set(it.permutations(f.clumps))
                if all(_phi_clump(c) == t for c, t in zip(perm, target))
            )
            expected = Fraction(
                multiset_sigma(m.clumps, inner=lambda _: 1),
                multiset_sigma(f.clumps, inner=lambda _: 1),
            )
            _expect(
                count == expected,
                lambda: f"|B| = {count} != {expected} for F = {f}, M = {m}",
            )


# ---------------------------------------------------------------------------
# Monomial-side identities.


def _monomial_slices(maxdeg: int, weights) -> list:
    out = []
    for d in range(1, maxdeg + 1):
        for w in weights(d):
            out.extend(mi.monomials_of(d, w))
    return out


def _check_novikov_laws(maxdeg: int, seen) -> None:
    # Pre-Lie on the whole aromatic Novikov algebra; right-NAP on the free
    # Novikov algebra itself (single weight -1 monomials).  The NAP identity
    # does not survive the aroma slots: the tensor S(M_0) (x) M_-1 separates
    # products that the underlying polynomial algebra would merge.
    basis: list = []
    for d in range(1, maxdeg + 1):
        basis.extend(mi.am_minus1_of_degree(d))
    nov = bilinear(mi.novikov)
    for x in basis:
        for y in basis:
            for z in basis:
                seen()
                lx, ly, lz = (LinComb.lift(v) for v in (x, y, z))
                lhs = nov(lx, nov(ly, lz)) - nov(nov(lx, ly), lz)
                rhs = nov(ly, nov(lx, lz)) - nov(nov(ly, lx), lz)
                _eq(lhs, rhs, f"pre-Lie on ({x}, {y}, {z})")
    monos: list = []
    for d in range(1, maxdeg + 1):
        monos.extend(
            mi.AromaticMI((), (m,)) for m in mi.m_minus1_of_degree(d)
        )
    for x in monos:
        for y in monos:
            for z in monos:
                seen()
                lx, ly, lz = (LinComb.lift(v) for v in (x, y, z))
                nap_l = nov(nov(lx, ly), lz)
                nap_r = nov(nov(lx, lz), ly)
                _eq(nap_l, nap_r, f"right-NAP on ({x}, {y}, {z})")


def _check_rinehart_monomials(maxdeg: int, seen) -> None:
    elems: list = []
    for d in range(1, maxdeg + 1):
        elems.extend(mi.am_minus1_of_degree(d))
    multiaromas: list = [mi.AMI_UNIT]
    for d in range(1, 3):
        for y in mi.ami_of_degree(d):
            if not y.roots:
                multiaromas.append(y)
    nov = bilinear(mi.novikov)
    anc = bilinear(mi.anchor)

    def bracket(a: LinComb, b: LinComb) -> LinComb:
        return nov(a, b) - nov(b, a)

    for x in elems:
        for yy in elems:
            lx, ly = LinComb.lift(x), LinComb.lift(yy)
            br = bracket(lx, ly)
            for ya in multiaromas:
                seen()
                # Leibniz: [x, ya . y] = ya . [x, y] + rho(x)(ya) . y
                scaled = mi.AromaticMI(yy.aromas + ya.aromas, yy.roots)
                lhs = bracket(lx, LinComb.lift(scaled))
                rhs = br.map_keys(lambda k: mi.AromaticMI(k.aromas + ya.aromas, k.roots))
                rho_x_ya = mi.anchor(x, ya) if ya.aromas else LinComb.zero()
                rhs = rhs + rho_x_ya.map_keys(
                    lambda k: mi.AromaticMI(k.aromas + yy.aromas, yy.roots)
                )
                _eq(lhs, rhs, f"Rinehart-Leibniz on ({x}, {ya}, {yy})")
                if ya.aromas:
                    # anchor is a morphism of Lie algebras
                    lhs2 = anc(br, LinComb.lift(ya))
                    rhs2 = anc(lx, mi.anchor(yy, ya)) - anc(ly, mi.anchor(x, ya))
                    _eq(lhs2, rhs2, f"anchor morphism on ({x}, {yy}, {ya})")


def _check_transpose_partial(maxdeg: int, seen) -> None:
    for d in range(1, maxdeg + 1):
        for w in range(-1, d + 1):
            lo = mi.monomials_of(d, w)
            hi = mi.monomials_of(d, w + 1)
            for p in lo:
                dp = mi.partial_mi(p)
                for q in hi:
                    seen()
                    lhs = pairing(dp, LinComb.lift(q))
                    rhs = pairing(LinComb.lift(p), mi.partialbar_mi(q))
                    _expect(
                        lhs == rhs,
                        lambda: f"<partial {p}, {q}> = {lhs} but <{p}, partialbar {q}> = {rhs}",
                    )


def _check_partialbar_closed_form(maxdeg: int, seen) -> None:
    singles = _monomial_slices(maxdeg, lambda d: range(-1, d + 1))
    for m in singles:
        for r in range(0, 5):
            seen()
            _eq(
                mi.partialbar_pow(m, r),
                mi.partialbar_iter(m, r),
                f"partialbar^{r} on {m}",
            )
    for d in range(1, min(maxdeg, 4) + 1):
        for x in mi.am_minus1_of_degree(d):
            for r in range(0, 4):
                seen()
                _eq(
                    mi.partialbar_pow(x, r),
                    mi.partialbar_iter(x, r),
                    f"partialbar^{r} on {x}",
                )


# ---------------------------------------------------------------------------
# Coproducts: coassociativity, counit, multiplicativity.


def _coassoc_body(basis_fn, coproduct, unit, product_mul, maxdeg, seen, label):
    for d in range(0, maxdeg + 1):
        for x in basis_fn(d):
            seen()
            delta = coproduct(x)
            lhs = LinComb.zero()
            rhs = LinComb.zero()
            for t, c in delta.terms.items():
                for t2, c2 in coproduct(t.left).terms.items():
                    lhs = lhs + LinComb.lift(Tensor(t2.left, Tensor(t2.right, t.right)), c * c2)
                for t2, c2 in coproduct(t.right).terms.items():
                    rhs = rhs + LinComb.lift(Tensor(t.left, Tensor(t2.left, t2.right)), c * c2)
            _eq(lhs, rhs, f"{label} coassociativity on {x}")
            # counit laws
            left_counit = LinComb.zero()
            right_counit = LinComb.zero()
            for t, c in delta.terms.items():
                if t.left == unit:
                    left_counit = left_counit + LinComb.lift(t.right, c)
                if t.right == unit:
                    right_counit = right_counit + LinComb.lift(t.left, c)
            _eq(left_counit, LinComb.lift(x), f"{label} left counit on {x}")
            _eq(right_counit, LinComb.lift(x), f"{label} right counit on {x}")
    # multiplicativity
    for d1 in range(1, maxdeg):
        for d2 in range(1, maxdeg - d1 + 1):
            for x in basis_fn(d1):
                for y in basis_fn(d2):
                    seen()
                    lhs = coproduct(product_mul(x, y))
                    rhs = LinComb.zero()
                    for t1, c1 in coproduct(x).terms.items():
                        for t2, c2 in coproduct(y).terms.items():
                            rhs = rhs + LinComb.lift(
                                Tensor(product_mul(t1.left, t2.left), product_mul(t1.right, t2.right)),
                                c1 * c2,
                            )
                    _eq(lhs, rhs, f"{label} multiplicativity on ({x}, {y})")


def _check_coassoc_bck_aro(maxdeg: int, seen) -> None:
    _coassoc_body(
        fo.aromatic_forests_of_order, fo.bck_aro, fo.AF_UNIT,
        lambda a, b: a.mul(b), maxdeg, seen, "bck-aro",
    )


def _check_coassoc_bck_cl(maxdeg: int, seen) -> None:
    _coassoc_body(
        fo.clumped_forests_of_order, fo.bck_cl, fo.CF_UNIT,
        lambda a, b: a.mul(b), maxdeg, seen, "bck-cl",
    )


def _check_coassoc_lot_aro(maxdeg: int, seen) -> None:
    _coassoc_body(
        mi.ami_of_degree, mi.lot_aro, mi.AMI_UNIT,
        lambda a, b: a.mul(b), maxdeg, seen, "lot-aro",
    )


def _check_coassoc_lot_cl(maxdeg: int, seen) -> None:
    _coassoc_body(
        mi.cmi_of_degree, mi.lot_cl, mi.CMI_UNIT,
        lambda a, b: a.mul(b), maxdeg, seen, "lot-cl",
    )


def _check_gl_duality(maxdeg: int, seen) -> None:
    flavors = (
        (fo.aromatic_forests_of_order, fo.gl_star_aro, fo.bck_aro, fo.deshuffle_aro, "aro"),
        (fo.clumped_forests_of_order, fo.gl_star_cl, fo.bck_cl, fo.deshuffle_cl, "cl"),
    )
    for basis_fn, star, bck, desh, label in flavors:
        for d1 in range(1, maxdeg):
            for d2 in range(1, maxdeg - d1 + 1):
                for x in basis_fn(d1):
                    for y in basis_fn(d2):
                        prod = star(x, y)
                        for z in basis_fn(d1 + d2):
                            seen()
                            lhs = pairing(prod, LinComb.lift(z))
                            rhs = pairing(tensor_product(LinComb.lift(x), LinComb.lift(y)), bck(z))
                            _expect(
                                lhs == rhs,
                                lambda: f"GL duality ({label}): <{x} * {y}, {z}> = {lhs} != {rhs}",
                            )
        # concatenation is dual to the deshuffle coproduct
        for d in range(1, maxdeg + 1):
            for z in basis_fn(d):
                dz = desh(z)
                for d1 in range(0, d + 1):
                    for x in basis_fn(d1):
                        for y in basis_fn(d - d1):
                            seen()
                            lhs = pairing(dz, LinComb.lift(Tensor(x, y)))
                            rhs = pairing(LinComb.lift(x.mul(y)), LinComb.lift(z))
                            _expect(
                                lhs == rhs,
                                lambda: f"deshuffle duality ({label}): {x}, {y}, {z}: {lhs} != {rhs}",
                            )


# ---------------------------------------------------------------------------
# Fertility and embedding identities.


def _check_phi_morphism(maxdeg: int, seen) -> None:
    for x in _aromatic_trees_upto(maxdeg - 1):
        for y in _aromatic_trees_upto(maxdeg - x.order):
            seen()
            lhs = fo.graft(x, y).apply(lambda f: LinComb.lift(_phi_am(f)))
            rhs = mi.novikov(_phi_am(x), _phi_am(y))
            _eq(lhs, rhs, f"fertility morphism on ({x}, {y})")


def _phi_am(f: fo.AromaticForest) -> mi.AromaticMI:
    return emb.phi(f)


def _check_phi_delta(maxdeg: int, seen) -> None:
    for kind in ("tree", "aroma"):
        for n in range(1, maxdeg + 1):
            for q in range(0, min(2, maxdeg - n) + 1):
                for x in fo.free_edge_objects(n, q, kind):
                    seen()
                    lhs = fo.delta_free(x).map_keys(emb.phi)
                    rhs = mi.partial_mi(emb.phi(x))
                    _eq(lhs, rhs, f"phi.delta = partial.phi on {x}")


def _check_jbar_partialbar(maxdeg: int, seen) -> None:
    for kind, wmin in (("aroma", 0), ("tree", -1)):
        for d in range(1, maxdeg + 1):
            for w in range(wmin, wmin + 3):
                for m in mi.monomials_of(d, w):
                    seen()
                    lhs = emb.j_bar(m, kind).apply(fo.deltabar_free)
                    rhs = mi.partialbar_mi(m).apply(lambda k: emb.j_bar(k, kind))
                    _eq(lhs, rhs, f"deltabar.jbar = jbar.partialbar on {m} ({kind})")


def _j_tensor(t: Tensor) -> LinComb:
    left = emb.j_aro(t.left)
    right = emb.j_aro(t.right)
    return tensor_product(left, right)


def _check_embedding_aro(maxdeg: int, seen) -> None:
    elems: list = []
    for d in range(0, min(maxdeg, 4) + 1):
        elems.extend(mi.ami_of_degree(d))
    for d in range(5, maxdeg + 1):
        for m in mi.m0_of_degree(d):
            elems.append(mi.AromaticMI((m,), ()))
        for m in mi.m_minus1_of_degree(d):
            elems.append(mi.AromaticMI((), (m,)))
    for x in elems:
        seen()
        lhs = LinComb.zero()
        for t, c in mi.lot_aro(x).terms.items():
            lhs = lhs + _j_tensor(t) * c
        rhs = emb.j_aro(x).apply(fo.bck_aro)
        _eq(lhs, rhs, f"aromatic embedding on {x}")


def _check_embedding_cl(maxdeg: int, seen) -> None:
    for d in range(0, maxdeg + 1):
        for x in mi.cmi_of_degree(d):
            seen()
            lhs = LinComb.zero()
            for t, c in mi.lot_cl(x).terms.items():
                lhs = lhs + tensor_product(emb.j_cl(t.left), emb.j_cl(t.right)) * c
            rhs = emb.j_cl(x).apply(fo.bck_cl)
            _eq(lhs, rhs, f"clumped embedding on {x}")


def _check_commuting_square(maxdeg: int, seen) -> None:
    for d in range(0, maxdeg + 1):
        for x in mi.ami_of_degree(d):
            seen()
            lhs = mi.phi_star(x).apply(emb.j_cl)
            rhs = emb.j_aro(x).apply(fo.psi_star)
            _eq(lhs, rhs, f"j_cl.phi* = psi*.j_aro on {x}")


def _check_matching_cuts(maxdeg: int, seen) -> None:
    for kind, weight in (("aroma", 0), ("tree", -1)):
        for d in range(1, maxdeg + 1):
            for m in mi.monomials_of(d, weight):
                preimages = emb.inverse_fertility(m, kind)
                for parts, rest, count in mi.monomial_cuts(m):
                    if not parts:
                        continue
                    seen()
                    r = len(parts)
                    left = emb.j_aro(mi.AromaticMI((), parts))
                    right = mi.partialbar_iter(rest, r).apply(
                        lambda k: emb.j_mono(k, kind).map_keys(_wrap_forest)
                    )
                    lhs = tensor_product(left, right) * count
                    rhs = LinComb.zero()
                    part_multiset = tuple(sorted(p.key for p in parts))
                    for obj, s in preimages:
                        for pieces, trunk, _ in fo.admissible_cuts(obj):
                            if tuple(sorted(emb.phi(p).key for p in pieces)) != part_multiset:
                                continue
                            rhs = rhs + LinComb.lift(
                                Tensor(
                                    fo.AromaticForest((), pieces),
                                    _wrap_forest(trunk),
                                ),
                                Fraction(m.mfact(), s),
                            )
                    _eq(lhs, rhs, f"matching cuts on {m} ({kind}), parts {part_multiset}")


def _wrap_forest(obj) -> fo.AromaticForest:
    if isinstance(obj, fo.RootedTree):
        return fo.AromaticForest((), (obj,))
    if isinstance(obj, fo.Aroma):
        return fo.AromaticForest((obj,), ())
    return obj


def _check_embedding_injectivity(maxdeg: int, seen) -> None:
    for d in range(1, maxdeg + 1):
        basis = mi.ami_of_degree(d)
        columns = {f: i for i, f in enumerate(fo.aromatic_forests_of_order(d))}
        rows = []
        for x in basis:
            seen()
            row = [Fraction(0)] * len(columns)
            for f, c in emb.j_aro(x).terms.items():
                row[columns[f]] = c
            rows.append(row)
        rank = _rank(rows)
        _expect(
            rank == len(basis),
            lambda: f"embedding rank {rank} < {len(basis)} at degree {d}",
        )


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [row[:] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        inv = 1 / pr[col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def _check_antipode_convolution(maxdeg: int, seen) -> None:
    structures = (
        (HopfStructure("bck-aro", lambda a, b: a.mul(b), fo.bck_aro, fo.AF_UNIT),
         fo.aromatic_forests_of_order),
        (HopfStructure("bck-cl", lambda a, b: a.mul(b), fo.bck_cl, fo.CF_UNIT),
         fo.clumped_forests_of_order),
        (HopfStructure("lot-aro", lambda a, b: a.mul(b), mi.lot_aro, mi.AMI_UNIT),
         mi.ami_of_degree),
        (HopfStructure("lot-cl", lambda a, b: a.mul(b), mi.lot_cl, mi.CMI_UNIT),
         mi.cmi_of_degree),
    )
    for hopf, basis_fn in structures:
        for d in range(0, maxdeg + 1):
            for x in basis_fn(d):
                seen()
                _expect(
                    hopf.convolution_check(x),
                    lambda: f"antipode convolution fails on {x} in {hopf.name}",
                )


CHECKS: dict = {
    "pre_lie_forests": (_check_pre_lie_forests, 5),
    "rinehart_forests": (_check_rinehart_forests, 4),
    "trace_div": (_check_trace_div, 4),
    "novikov_laws": (_check_novikov_laws, 3),
    "rinehart_monomials": (_check_rinehart_monomials, 3),
    "transpose_partial": (_check_transpose_partial, 5),
    "transpose_delta": (_check_transpose_delta, 5),
    "partialbar_closed_form": (_check_partialbar_closed_form, 5),
    "delete_free_edges": (_check_delete_free_edges, 4),
    "full_trunk": (_check_full_trunk, 4),
    "grafting_count": (_check_grafting_count, 4),
    "graft_cut_count": (_check_graft_cut_count, 4),
    "tuple_count": (_check_tuple_count, 4),
    "coassoc_bck_aro": (_check_coassoc_bck_aro, 4),
    "coassoc_bck_cl": (_check_coassoc_bck_cl, 4),
    "coassoc_lot_aro": (_check_coassoc_lot_aro, 4),
    "coassoc_lot_cl": (_check_coassoc_lot_cl, 4),
    "gl_duality": (_check_gl_duality, 4),
    "phi_morphism": (_check_phi_morphism, 5),
    "phi_delta": (_check_phi_delta, 4),
    "jbar_partialbar": (_check_jbar_partialbar, 4),
    "embedding_aro": (_check_embedding_aro, 5),
    "embedding_cl": (_check_embedding_cl, 4),
    "commuting_square": (_check_commuting_square, 4),
    "matching_cuts": (_check_matching_cuts, 4),
    "embedding_injectivity": (_check_embedding_injectivity, 5),
    "antipode_convolution": (_check_antipode_convolution, 4),
}


def check(name: str, maxdeg: int | None = None) -> Report:
    """Run one registered check; failures come back as report data."""
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    body, default = CHECKS[name]
    return _run(name, maxdeg if maxdeg is not None else default, body)


def run_all(names=None, maxdeg: int | None = None) -> list[Report]:
    selected = list(CHECKS) if names is None else list(names)
    return [check(n, maxdeg) for n in selected]
