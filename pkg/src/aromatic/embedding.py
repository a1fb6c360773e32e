"""The fertility map and the Hopf embeddings of multi-indices into forests.

The fertility of a vertex is its number of incoming edges, free edges
included.  The fertility map records each vertex as the letter
``x_(f(v)-1)^color``; trees of order n map to monomials of weight -1 (plus
one per free edge), aromas to weight 0.  The embeddings ``j`` send a
monomial to the sigma-weighted sum of its fertility preimages and extend
multiplicatively to aromatic and clumped monomials.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra import LinComb
from .forests import (
    Aroma,
    AromaticForest,
    ClumpedForest,
    RootedTree,
    ClumpedForest as _CF,
    to_graph,
)
from .multiindices import AromaticMI, ClumpedMI, MultiIndex, require_plain


def _fertility_profile(obj) -> MultiIndex:
    g = to_graph(obj)
    indeg = [0] * g.n
    for v in range(g.n):
        if g.out[v] is not None:
            indeg[g.out[v]] += 1
    counts: dict = {}
    for v in range(g.n):
        letter = (indeg[v] + g.free[v] - 1, g.color[v])
        counts[letter] = counts.get(letter, 0) + 1
    return MultiIndex(counts)


def phi(x):
    """Fertility map on trees, aromas, aromatic forests and clumped forests."""
    if isinstance(x, (RootedTree, Aroma)):
        return _fertility_profile(x)
    if isinstance(x, AromaticForest):
        return AromaticMI(
            tuple(_fertility_profile(a) for a in x.aromas),
            tuple(_fertility_profile(t) for t in x.trees),
        )
    if isinstance(x, ClumpedForest):
        return ClumpedMI(tuple(
            AromaticMI(
                tuple(_fertility_profile(a) for a in c.aromas),
                (_fertility_profile(c.trees[0]),),
            )
            for c in x.clumps
        ))
    raise TypeError(f"no fertility map for {type(x).__name__}")


# ---------------------------------------------------------------------------
# Inverse fertility: enumerate all trees/aromas with a prescribed profile.
# A letter (j, color) prescribes fertility f = j + 1 = children + free edges,
# so any assembly whose per-vertex child counts stay within the budget is a
# preimage, the free-edge counts being determined by the slack.


def _letters_of(m: MultiIndex) -> tuple:
    out = []
    for (j, c), k in m.entries:
        out.extend([(j + 1, c)] * k)
    return tuple(sorted(out, key=lambda l: (l[0], l[1] is not None, l[1] or "")))


def _partitions(items: tuple):
    """Partitions of a letter multiset into unordered nonempty blocks."""
    n = len(items)
    if n == 0:
        return ((),)
    seen = set()
    out = []

    def rec(idx: int, blocks: list[list]):
        if idx == n:
            part = tuple(sorted(tuple(sorted(b)) for b in blocks))
            if part not in seen:
                seen.add(part)
                out.append(part)
            return
        for b in blocks:
            b.append(items[idx])
            rec(idx + 1, blocks)
            b.pop()
        blocks.append([items[idx]])
        rec(idx + 1, blocks)
        blocks.pop()

    rec(0, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _gen_trees(letters: tuple, root_offset: int = 0) -> tuple:
    """All canonical trees on the letter multiset; the root may spend at most
    fertility + root_offset on children (offset -1 under a cycle edge)."""
    out = set()
    distinct = sorted(set(letters))
    for root in distinct:
        f, color = root
        budget = f + root_offset
        if budget < 0:
            continue
        rest = list(letters)
        rest.remove(root)
        for forest in _gen_forests(tuple(rest)):
            if len(forest) <= budget:
                out.add(RootedTree(forest, color, budget - len(forest)))
    return tuple(sorted(out, key=lambda t: t.key))


@lru_cache(maxsize=None)
def _gen_forests(letters: tuple) -> tuple:
    """All canonical multisets of trees covering the letter multiset."""
    if not letters:
        return ((),)
    out = set()
    for part in _partitions(letters):
        pools = [_gen_trees(block) for block in part]
        for combo in itertools.product(*pools):
            out.add(tuple(sorted(combo, key=lambda t: t.key)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _gen_aromas(letters: tuple) -> tuple:
    """All canonical aromas on the letter multiset: split into K cycle
    blocks, grow a tree per block with the cycle edge consuming one unit of
    the root's fertility, quotient by rotation."""
    if not letters:
        return ()
    out = set()
    for part in _partitions(letters):
        for ordering in set(itertools.permutations(part)):
            pools = [_gen_trees(block, -1) for block in ordering]
            for combo in itertools.product(*pools):
                out.add(Aroma(combo))
    return tuple(sorted(out, key=lambda a: a.key))


def inverse_fertility(m: MultiIndex, kind: str) -> tuple:
    """All canonical trees (resp. aromas) with fertility profile m, paired
    with their symmetry coefficients."""
    letters = _letters_of(m)
    if kind == "tree":
        objs = _gen_trees(letters)
    elif kind == "aroma":
        objs = _gen_aromas(letters)
    else:
        raise ValueError(f"kind must be 'tree' or 'aroma', got {kind!r}")
    return tuple((o, o.sigma()) for o in objs)


# ---------------------------------------------------------------------------
# The embeddings.


def j_mono(m: MultiIndex, kind: str) -> LinComb:
    """j(x^k) = sum over fertility preimages of sigma(x^k)/sigma(object).

    ``kind`` selects the tree or aroma interpretation; for the plain spaces
    the weight (-1 resp. 0) forces it, for the free-edge classes both
    readings exist and must be chosen by the caller.
    """
    out: dict = {}
    for obj, s in inverse_fertility(m, kind):
        out[obj] = Fraction(m.mfact(), s)
    return LinComb(out)


def j_aro(x) -> LinComb:
    """Hopf embedding of aromatic monomials into aromatic forests, the
    multiplicative extension of j on single monomials."""
    if isinstance(x, MultiIndex):
        if x.weight == -1:
            return j_mono(x, "tree")
        if x.weight == 0:
            return j_mono(x, "aroma")
        raise ValueError(
            f"embed-aro expects weight -1 or 0 monomials, got weight {x.weight}"
        )
    require_plain(x, "embed-aro")
    result = LinComb.lift(AromaticForest())
    for kappa in x.aromas:
        part = j_mono(kappa, "aroma")
        result = _forest_mul(result, part, is_aroma=True)
    for k in x.roots:
        part = j_mono(k, "tree")
        result = _forest_mul(result, part, is_aroma=False)
    return result


def _forest_mul(acc: LinComb, part: LinComb, is_aroma: bool) -> LinComb:
    out: dict = {}
    for f, c1 in acc.terms.items():
        for obj, c2 in part.terms.items():
            if is_aroma:
                f2 = AromaticForest(f.aromas + (obj,), f.trees)
            else:
                f2 = AromaticForest(f.aromas, f.trees + (obj,))
            out[f2] = out.get(f2, Fraction(0)) + c1 * c2
    return LinComb(out)


def j_cl(x: ClumpedMI) -> LinComb:
    """Clumped embedding: apply j_aro clump by clump, each image forest
    (one tree, as the clump has one root factor) becoming one clump."""
    result = LinComb.lift(_CF(()))
    for clump in x.clumps:
        part = j_aro(clump)
        out: dict = {}
        for cf, c1 in result.terms.items():
            for forest, c2 in part.terms.items():
                cf2 = _CF(cf.clumps + (forest,))
                out[cf2] = out.get(cf2, Fraction(0)) + c1 * c2
        result = LinComb(out)
    return result


def j_bar(m: MultiIndex, kind: str) -> LinComb:
    """Free-edge extension of the embedding on single monomials.

    Weight n >= 0 monomials read as aromas carry n free edges; read as trees
    they carry n + 1.  The plain cases are weight 0 and -1; weights below
    have no preimage and give the zero combination.
    """
    if kind not in ("tree", "aroma"):
        raise ValueError(f"kind must be 'tree' or 'aroma', got {kind!r}")
    return j_mono(m, kind)
