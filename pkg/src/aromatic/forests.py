"""Aromatic and clumped forests: canonical objects and tree-side structure.

An aromatic forest is a directed graph in which every vertex has exactly one
outgoing edge except the roots of its trees; the rootless connected
components (aromas) each carry exactly one directed cycle.  Vertices are
decorated by an optional color and a count of free edges (dangling incoming
half-edges), i.e. the decoration set is C x N0.

Canonical forms:

- rooted trees sort their children by canonical encoding,
- an aroma is the lexicographically minimal rotation of its cycle tuple,
  where entry i of the tuple is the hanging tree whose root points to the
  root of entry i+1 (indices mod K),
- forests keep aromas and trees as sorted multisets; clumped forests keep
  their clumps sorted.

The module implements symmetry coefficients, grafting, divergence, free-edge
raising/lowering, the trace, admissible cuts, both BCK coproducts, the
projection psi with its sigma-adjoint, the Grossman-Larson product, and the
graded enumerations used by the verification engine.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import (
    LinComb,
    Tensor,
    group_multiset,
    multiset_partitions,
    multiset_sigma,
    multiset_splittings,
)

DEFAULT_COLORS = (None,)


def _vertex_key(color, free: int) -> str:
    s = "b"
    if color is not None:
        s += f":{color}"
    if free:
        s += f"!{free}"
    return s


class RootedTree:
    """A rooted tree with color/free-edge decorations, children canonically
    sorted.  Edges point from child to root."""

    __slots__ = ("color", "free", "children", "key", "order", "_sigma")

    def __init__(self, children=(), color=None, free: int = 0):
        if free < 0:
            raise ValueError("free-edge count must be nonnegative")
        children = tuple(sorted(children, key=lambda t: t.key))
        self.children = children
        self.color = color
        self.free = free
        body = _vertex_key(color, free)
        if children:
            body += "[" + ",".join(c.key for c in children) + "]"
        self.key = body
        self.order = 1 + sum(c.order for c in children)
        self._sigma = None

    @property
    def degree(self) -> int:
        return self.order

    @property
    def free_total(self) -> int:
        return self.free + sum(c.free_total for c in self.children)

    def sigma(self) -> int:
        if self._sigma is None:
            self._sigma = multiset_sigma(self.children)
        return self._sigma

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.key == other.key

    def __hash__(self):
        return hash(("T", self.key))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


LEAF = RootedTree()


class Aroma:
    """A rootless one-cycle component, stored as the minimal rotation of its
    cycle tuple of hanging trees."""

    __slots__ = ("trees", "key", "order", "_sigma")

    def __init__(self, trees):
        trees = tuple(trees)
        if not trees:
            raise ValueError("an aroma has cycle length >= 1")
        k = len(trees)
        rotations = [trees[i:] + trees[:i] for i in range(k)]
        best = min(rotations, key=lambda r: tuple(t.key for t in r))
        self.trees = best
        self.key = "<" + ",".join(t.key for t in best) + ">"
        self.order = sum(t.order for t in best)
        self._sigma = None

    @property
    def degree(self) -> int:
        return self.order

    @property
    def free_total(self) -> int:
        return sum(t.free_total for t in self.trees)

    def sigma(self) -> int:
        # Size of the automorphism group of the directed graph: rotations
        # fixing the cycle tuple times internal tree automorphisms.
        if self._sigma is None:
            keys = tuple(t.key for t in self.trees)
            k = len(keys)
            rot = sum(1 for i in range(k) if keys[i:] + keys[:i] == keys)
            total = rot
            for t in self.trees:
                total *= t.sigma()
            self._sigma = total
        return self._sigma

    def __eq__(self, other):
        return isinstance(other, Aroma) and self.key == other.key

    def __hash__(self):
        return hash(("A", self.key))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


class AromaticForest:
    """A multiset of aromas together with a multiset of trees.

    A multiaroma is an aromatic forest with no trees; an aromatic tree has
    exactly one tree.  The empty forest is the unit, rendered ``1``.
    """

    __slots__ = ("aromas", "trees", "key", "order", "_sigma")

    def __init__(self, aromas=(), trees=()):
        self.aromas = tuple(sorted(aromas, key=lambda a: a.key))
        self.trees = tuple(sorted(trees, key=lambda t: t.key))
        parts = [a.key for a in self.aromas] + [t.key for t in self.trees]
        self.key = " ".join(parts) if parts else "1"
        self.order = sum(a.order for a in self.aromas) + sum(t.order for t in self.trees)
        self._sigma = None

    @property
    def degree(self) -> int:
        return self.order

    @property
    def free_total(self) -> int:
        return sum(a.free_total for a in self.aromas) + sum(t.free_total for t in self.trees)

    def is_unit(self) -> bool:
        return not self.aromas and not self.trees

    def sigma(self) -> int:
        if self._sigma is None:
            self._sigma = multiset_sigma(self.aromas) * multiset_sigma(self.trees)
        return self._sigma

    def mul(self, other: AromaticForest) -> AromaticForest:
        return AromaticForest(self.aromas + other.aromas, self.trees + other.trees)

    def __eq__(self, other):
        return isinstance(other, AromaticForest) and self.key == other.key

    def __hash__(self):
        return hash(("F", self.key))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


AF_UNIT = AromaticForest()


def aromatic_tree(aromas, tree: RootedTree) -> AromaticForest:
    return AromaticForest(aromas, (tree,))


class ClumpedForest:
    """A multiset of clumps, each clump an aromatic tree keeping its own
    multiaroma attached."""

    __slots__ = ("clumps", "key", "order", "_sigma")

    def __init__(self, clumps=()):
        for c in clumps:
            if len(c.trees) != 1:
                raise ValueError(f"clump must contain exactly one tree: {c!r}")
        self.clumps = tuple(sorted(clumps, key=lambda c: c.key))
        self.key = " # ".join(f"({c.key})" for c in self.clumps) if self.clumps else "1"
        self.order = sum(c.order for c in self.clumps)
        self._sigma = None

    @property
    def degree(self) -> int:
        return self.order

    def is_unit(self) -> bool:
        return not self.clumps

    def sigma(self) -> int:
        if self._sigma is None:
            self._sigma = multiset_sigma(self.clumps)
        return self._sigma

    def mul(self, other: ClumpedForest) -> ClumpedForest:
        return ClumpedForest(self.clumps + other.clumps)

    def __eq__(self, other):
        return isinstance(other, ClumpedForest) and self.key == other.key

    def __hash__(self):
        return hash(("C", self.key))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


CF_UNIT = ClumpedForest()


# ---------------------------------------------------------------------------
# Graph scratch layer.  All structural surgery (grafting, divergence, trace,
# free edges) goes through an explicit functional-graph representation and is
# canonicalized on the way back, which keeps cycle orientation consistent
# everywhere: out[v] is the target of v's unique outgoing edge, None for a
# tree root.


class Graph:
    __slots__ = ("out", "color", "free")

    def __init__(self, out, color, free):
        self.out = list(out)
        self.color = list(color)
        self.free = list(free)

    def copy(self) -> Graph:
        return Graph(self.out, self.color, self.free)

    @property
    def n(self) -> int:
        return len(self.out)


def _add_tree(g: Graph, t: RootedTree, parent) -> int:
    idx = g.n
    g.out.append(parent)
    g.color.append(t.color)
    g.free.append(t.free)
    for c in t.children:
        _add_tree(g, c, idx)
    return idx


def to_graph(x) -> Graph:
    """Explicit graph of a RootedTree, Aroma or AromaticForest."""
    g = Graph([], [], [])
    if isinstance(x, RootedTree):
        _add_tree(g, x, None)
        return g
    if isinstance(x, Aroma):
        x = AromaticForest((x,), ())
    for a in x.aromas:
        roots = [_add_tree(g, t, None) for t in a.trees]
        for i, r in enumerate(roots):
            g.out[r] = roots[(i + 1) % len(roots)]
    for t in x.trees:
        _add_tree(g, t, None)
    return g


def _build_subtree(g: Graph, children: list[list[int]], v: int, skip: int | None = None) -> RootedTree:
    subs = [_build_subtree(g, children, c) for c in children[v] if c != skip]
    return RootedTree(subs, g.color[v], g.free[v])


def from_graph(g: Graph) -> AromaticForest:
    """Decompose a functional graph into its canonical aromatic forest."""
    n = g.n
    children: list[list[int]] = [[] for _ in range(n)]
    for v, w in enumerate(g.out):
        if w is not None:
            children[w].append(v)
    comp = [-1] * n
    order = []
    for v in range(n):
        if comp[v] == -1:
            stack = [v]
            comp[v] = v
            while stack:
                u = stack.pop()
                nbrs = children[u] + ([g.out[u]] if g.out[u] is not None else [])
                for w in nbrs:
                    if comp[w] == -1:
                        comp[w] = v
                        stack.append(w)
            order.append(v)
    aromas = []
    trees = []
    for c in order:
        verts = [v for v in range(n) if comp[v] == c]
        root = next((v for v in verts if g.out[v] is None), None)
        if root is not None:
            trees.append(_build_subtree(g, children, root))
            continue
        # locate the unique cycle by walking out-edges
        seen: dict[int, int] = {}
        v = verts[0]
        steps = 0
        while v not in seen:
            seen[v] = steps
            steps += 1
            v = g.out[v]
        cycle = []
        start = v
        while True:
            cycle.append(v)
            v = g.out[v]
            if v == start:
                break
        cycle_set = set(cycle)
        hanging = []
        for v in cycle:
            subs = [
                _build_subtree(g, children, w)
                for w in children[v]
                if w not in cycle_set
            ]
            hanging.append(RootedTree(subs, g.color[v], g.free[v]))
        aromas.append(Aroma(hanging))
    return AromaticForest(aromas, trees)


def _same_shape(x, result: AromaticForest):
    """Return ``result`` coerced back to the type of ``x``."""
    if isinstance(x, RootedTree):
        (t,) = result.trees
        return t
    if isinstance(x, Aroma):
        (a,) = result.aromas
        return a
    return result


# ---------------------------------------------------------------------------
# Grafting, divergence, free edges, trace.


def graft(x: AromaticForest, y: AromaticForest) -> LinComb:
    """Pre-Lie grafting of aromatic trees: attach the root of x's tree to
    every vertex of y (tree and aroma vertices alike); aromas multiply."""
    if len(x.trees) != 1 or len(y.trees) != 1:
        raise ValueError("graft expects aromatic trees (exactly one tree each)")
    gy = to_graph(y)
    n_target = gy.n
    out = LinComb.zero()
    for v in range(n_target):
        g = gy.copy()
        root = _add_tree(g, x.trees[0], v)
        for a in x.aromas:
            roots = [_add_tree(g, t, None) for t in a.trees]
            for i, r in enumerate(roots):
                g.out[r] = roots[(i + 1) % len(roots)]
        out = out + LinComb.lift(from_graph(g))
    return out


def anchor_forest(x: AromaticForest, a: AromaticForest) -> LinComb:
    """rho(x)(a) for a multiaroma a: graft x's tree onto each vertex of a,
    multiplying x's aromas in.  Lands in multiaromas."""
    if len(x.trees) != 1:
        raise ValueError("anchor expects an aromatic tree on the left")
    if a.trees:
        raise ValueError("anchor acts on multiaromas")
    ga = to_graph(a)
    out = LinComb.zero()
    for v in range(ga.n):
        g = ga.copy()
        _add_tree(g, x.trees[0], v)
        for ar in x.aromas:
            roots = [_add_tree(g, t, None) for t in ar.trees]
            for i, r in enumerate(roots):
                g.out[r] = roots[(i + 1) % len(roots)]
        out = out + LinComb.lift(from_graph(g))
    return out


def divergence(x: AromaticForest) -> LinComb:
    """Add an edge from the root to each vertex in turn; lands in multiaromas."""
    if len(x.trees) != 1:
        raise ValueError("divergence expects an aromatic tree")
    g0 = to_graph(x)
    root = next(v for v in range(g0.n) if g0.out[v] is None)
    out = LinComb.zero()
    for v in range(g0.n):
        g = g0.copy()
        g.out[root] = v
        out = out + LinComb.lift(from_graph(g))
    return out


def delta_free(x) -> LinComb:
    """delta = sum over vertices of "add one free edge here"."""
    g0 = to_graph(x)
    out = LinComb.zero()
    for v in range(g0.n):
        g = g0.copy()
        g.free[v] += 1
        out = out + LinComb.lift(_same_shape(x, from_graph(g)))
    return out


def deltabar_free(x) -> LinComb:
    """deltabar = sum over vertices of "remove one free edge here"; a vertex
    without free edges contributes zero."""
    g0 = to_graph(x)
    out = LinComb.zero()
    for v in range(g0.n):
        if g0.free[v] >= 1:
            g = g0.copy()
            g.free[v] -= 1
            out = out + LinComb.lift(_same_shape(x, from_graph(g)))
    return out


def trace(x: AromaticForest) -> LinComb:
    """Link the root to the unique free edge, consuming it."""
    if len(x.trees) != 1:
        raise ValueError("trace expects an aromatic tree")
    if x.free_total != 1:
        raise ValueError(f"trace expects exactly one free edge, got {x.free_total}")
    g = to_graph(x)
    root = next(v for v in range(g.n) if g.out[v] is None)
    v = next(v for v in range(g.n) if g.free[v] >= 1)
    g.free[v] -= 1
    g.out[root] = v
    return LinComb.lift(from_graph(g))


# ---------------------------------------------------------------------------
# Admissible cuts.  A cut is a subset of non-cycle edges with at most one cut
# per root-to-leaf path; cuts are enumerated per edge instance, so isomorphic
# results keep their multiplicity.


def tree_cuts(t: RootedTree) -> list[tuple[tuple, RootedTree, RootedTree]]:
    """All admissible cuts of a tree as (pieces, trunk, full trunk) where the
    full trunk carries one extra free edge per severed child."""
    per_child = []
    for c in t.children:
        options = [((c,), None, None)]
        options.extend(tree_cuts(c))
        per_child.append(options)
    out = []
    for combo in itertools.product(*per_child):
        pieces: list[RootedTree] = []
        kept: list[RootedTree] = []
        kept_full: list[RootedTree] = []
        severed = 0
        for ps, trunk, full in combo:
            pieces.extend(ps)
            if trunk is None:
                severed += 1
            else:
                kept.append(trunk)
                kept_full.append(full)
        out.append(
            (
                tuple(pieces),
                RootedTree(kept, t.color, t.free),
                RootedTree(kept_full, t.color, t.free + severed),
            )
        )
    return out


def aroma_cuts(a: Aroma) -> list[tuple[tuple, Aroma, Aroma]]:
    """Admissible cuts of an aroma: cycle edges are never cut."""
    per_pos = [tree_cuts(t) for t in a.trees]
    out = []
    for combo in itertools.product(*per_pos):
        pieces: list[RootedTree] = []
        trunk = []
        full = []
        for ps, tr, fl in combo:
            pieces.extend(ps)
            trunk.append(tr)
            full.append(fl)
        out.append((tuple(pieces), Aroma(trunk), Aroma(full)))
    return out


def forest_cuts(x: AromaticForest) -> list[tuple[tuple, AromaticForest, AromaticForest]]:
    """Admissible cuts of an aromatic forest, per edge subset."""
    per_factor = []
    for a in x.aromas:
        per_factor.append([(ps, ("a", tr), ("a", fl)) for ps, tr, fl in aroma_cuts(a)])
    for t in x.trees:
        per_factor.append([(ps, ("t", tr), ("t", fl)) for ps, tr, fl in tree_cuts(t)])
    out = []
    for combo in itertools.product(*per_factor):
        pieces: list[RootedTree] = []
        ar, tr = [], []
        arf, trf = [], []
        for ps, (_, trunk), (_, full) in combo:
            pieces.extend(ps)
            if isinstance(trunk, Aroma):
                ar.append(trunk)
                arf.append(full)
            else:
                tr.append(trunk)
                trf.append(full)
        out.append((tuple(pieces), AromaticForest(ar, tr), AromaticForest(arf, trf)))
    return out


def admissible_cuts(x) -> list[tuple[tuple, object, object]]:
    """Cuts of a RootedTree, Aroma or AromaticForest: (pieces, R^c, Rbar^c)."""
    if isinstance(x, RootedTree):
        return tree_cuts(x)
    if isinstance(x, Aroma):
        return aroma_cuts(x)
    return forest_cuts(x)


# ---------------------------------------------------------------------------
# BCK coproducts.


def _bck_factor_terms(obj, is_aroma: bool) -> list[tuple[AromaticForest, AromaticForest]]:
    terms = []
    if is_aroma:
        terms.append((AromaticForest((obj,), ()), AF_UNIT))
        for ps, trunk, _ in aroma_cuts(obj):
            terms.append((AromaticForest((), ps), AromaticForest((trunk,), ())))
    else:
        terms.append((AromaticForest((), (obj,)), AF_UNIT))
        for ps, trunk, _ in tree_cuts(obj):
            terms.append((AromaticForest((), ps), AromaticForest((), (trunk,))))
    return terms


def bck_aro(x: AromaticForest) -> LinComb:
    """Butcher-Connes-Kreimer coproduct on aromatic forests:
    extraction of admissible-cut pieces tensor the trunk, extended
    multiplicatively over the factors."""
    result = LinComb.lift(Tensor(AF_UNIT, AF_UNIT))
    for a in x.aromas:
        result = _tensor_mul_forest(result, _bck_factor_terms(a, True))
    for t in x.trees:
        result = _tensor_mul_forest(result, _bck_factor_terms(t, False))
    return result


def _tensor_mul_forest(acc: LinComb, factor_terms) -> LinComb:
    out: dict = {}
    for tns, c in acc.terms.items():
        for left, right in factor_terms:
            t2 = Tensor(tns.left.mul(left), tns.right.mul(right))
            out[t2] = out.get(t2, Fraction(0)) + c
    return LinComb(out)


def psi(x: ClumpedForest) -> AromaticForest:
    """Forget the clumping."""
    out = AF_UNIT
    for c in x.clumps:
        out = out.mul(c)
    return out


def psi_star(x: AromaticForest) -> LinComb:
    """Sigma-adjoint of psi: distribute each aroma instance onto one of the
    tree instances; zero when aromas are present but no tree is."""
    if x.aromas and not x.trees:
        return LinComb.zero()
    out: dict = {}
    for assignment in itertools.product(range(len(x.trees)), repeat=len(x.aromas)):
        buckets: list[list[Aroma]] = [[] for _ in x.trees]
        for aroma, slot in zip(x.aromas, assignment):
            buckets[slot].append(aroma)
        cf = ClumpedForest(
            tuple(aromatic_tree(b, t) for b, t in zip(buckets, x.trees))
        )
        out[cf] = out.get(cf, Fraction(0)) + 1
    return LinComb(out)


def bck_cl(x: ClumpedForest) -> LinComb:
    """Clumped BCK coproduct: per clump, push the extracted side through
    psi_star and keep the trunk as a single clump; terms whose trunk is a
    multiaroma alone are removed."""
    result = LinComb.lift(Tensor(CF_UNIT, CF_UNIT))
    for clump in x.clumps:
        result = _tensor_mul_clumped(result, _bck_cl_clump(clump))
    return result


def _bck_cl_clump(clump: AromaticForest) -> LinComb:
    out = LinComb.zero()
    for left, right, c in _bck_aro_terms(clump):
        if right.is_unit():
            rcf = CF_UNIT
        elif right.trees:
            rcf = ClumpedForest((right,))
        else:
            continue  # aromas alone on the trunk side
        lhs = psi_star(left)
        for lcf, c2 in lhs.terms.items():
            out = out + LinComb.lift(Tensor(lcf, rcf), c * c2)
    return out


def _bck_aro_terms(x: AromaticForest):
    for tns, c in bck_aro(x).terms.items():
        yield tns.left, tns.right, c


def _tensor_mul_clumped(acc: LinComb, factor: LinComb) -> LinComb:
    out: dict = {}
    for t1, c1 in acc.terms.items():
        for t2, c2 in factor.terms.items():
            t = Tensor(t1.left.mul(t2.left), t1.right.mul(t2.right))
            out[t] = out.get(t, Fraction(0)) + c1 * c2
    return LinComb(out)


# ---------------------------------------------------------------------------
# Deshuffle coproducts and Grossman-Larson products.


def deshuffle_aro(x: AromaticForest) -> LinComb:
    """Deshuffle on S(aromas) (x) S(trees)."""
    out: dict = {}
    for la, ra, ma in multiset_splittings(x.aromas):
        for lt, rt, mt in multiset_splittings(x.trees):
            t = Tensor(AromaticForest(la, lt), AromaticForest(ra, rt))
            out[t] = out.get(t, Fraction(0)) + ma * mt
    return LinComb(out)


def deshuffle_cl(x: ClumpedForest) -> LinComb:
    out: dict = {}
    for lc, rc, m in multiset_splittings(x.clumps):
        t = Tensor(ClumpedForest(lc), ClumpedForest(rc))
        out[t] = out.get(t, Fraction(0)) + m
    return LinComb(out)


def go_action(x: AromaticForest, y: AromaticForest) -> LinComb:
    """Guin-Oudom action: every tree of x grafts onto some vertex of y
    (independently), x's aromas multiply in."""
    gy = to_graph(y)
    if x.trees and gy.n == 0:
        return LinComb.zero()
    out: dict = {}
    for assignment in itertools.product(range(gy.n), repeat=len(x.trees)):
        g = gy.copy()
        for t, v in zip(x.trees, assignment):
            _add_tree(g, t, v)
        for a in x.aromas:
            roots = [_add_tree(g, t, None) for t in a.trees]
            for i, r in enumerate(roots):
                g.out[r] = roots[(i + 1) % len(roots)]
        f = from_graph(g)
        out[f] = out.get(f, Fraction(0)) + 1
    return LinComb(out)


def gl_star_aro(x: AromaticForest, y: AromaticForest) -> LinComb:
    """Grossman-Larson product on aromatic forests via the Guin-Oudom
    splitting: keep part concatenates, acting part grafts."""
    out = LinComb.zero()
    for keep, act, mult in multiset_splittings(x.trees):
        acted = go_action(AromaticForest((), act), y)
        base = AromaticForest(x.aromas, keep)
        for f, c in acted.terms.items():
            out = out + LinComb.lift(base.mul(f), mult * c)
    return out


def go_action_cl(acting: tuple, y: ClumpedForest) -> LinComb:
    """Each acting clump grafts its tree onto a vertex of one clump of y and
    deposits its aromas in that same clump."""
    if not acting:
        return LinComb.lift(y)
    slots = []
    graphs = [to_graph(c) for c in y.clumps]
    for ci, g in enumerate(graphs):
        slots.extend((ci, v) for v in range(g.n))
    if not slots:
        return LinComb.zero()
    out: dict = {}
    for assignment in itertools.product(slots, repeat=len(acting)):
        gs = [g.copy() for g in graphs]
        for clump, (ci, v) in zip(acting, assignment):
            g = gs[ci]
            _add_tree(g, clump.trees[0], v)
            for a in clump.aromas:
                roots = [_add_tree(g, t, None) for t in a.trees]
                for i, r in enumerate(roots):
                    g.out[r] = roots[(i + 1) % len(roots)]
        cf = ClumpedForest(tuple(from_graph(g) for g in gs))
        out[cf] = out.get(cf, Fraction(0)) + 1
    return LinComb(out)


def gl_star_cl(x: ClumpedForest, y: ClumpedForest) -> LinComb:
    out = LinComb.zero()
    for keep, act, mult in multiset_splittings(x.clumps):
        acted = go_action_cl(act, y)
        base = ClumpedForest(keep)
        for f, c in acted.terms.items():
            out = out + LinComb.lift(base.mul(f), mult * c)
    return out


def gl_star(x, y) -> LinComb:
    """Grossman-Larson product, dispatching on the forest flavor."""
    if isinstance(x, ClumpedForest):
        return gl_star_cl(x, y)
    return gl_star_aro(x, y)


# ---------------------------------------------------------------------------
# Enumeration of the graded bases.


@lru_cache(maxsize=None)
def trees_of_order(n: int, colors=DEFAULT_COLORS) -> tuple:
    """All rooted trees with n vertices, canonical and sorted."""
    if n <= 0:
        return ()
    out = set()
    for forest in tree_forests_of_order(n - 1, colors):
        for c in colors:
            out.add(RootedTree(forest, c))
    return tuple(sorted(out, key=lambda t: t.key))


@lru_cache(maxsize=None)
def tree_forests_of_order(n: int, colors=DEFAULT_COLORS) -> tuple:
    """All multisets of rooted trees with n vertices in total (n >= 0)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = set()
    for k in range(1, n + 1):
        for t in trees_of_order(k, colors):
            for rest in tree_forests_of_order(n - k, colors):
                out.add(tuple(sorted(rest + (t,), key=lambda s: s.key)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def aromas_of_order(n: int, colors=DEFAULT_COLORS) -> tuple:
    """All aromas with n vertices: cycle length K, trees hanging off."""
    out = set()
    for k in range(1, n + 1):
        for comp in _compositions(n, k):
            pools = [trees_of_order(c, colors) for c in comp]
            for combo in itertools.product(*pools):
                out.add(Aroma(combo))
    return tuple(sorted(out, key=lambda a: a.key))


def _compositions(n: int, k: int):
    """Ordered k-tuples of positive integers summing to n."""
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def multiaromas_of_order(n: int, colors=DEFAULT_COLORS) -> tuple:
    """All multisets of aromas with n vertices in total (n >= 0)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = set()
    for k in range(1, n + 1):
        for a in aromas_of_order(k, colors):
            for rest in multiaromas_of_order(n - k, colors):
                out.add(tuple(sorted(rest + (a,), key=lambda s: s.key)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def aromatic_trees_of_order(n: int, colors=DEFAULT_COLORS) -> tuple:
    out = []
    for k in range(0, n):
        for aromas in multiaromas_of_order(k, colors):
            for t in trees_of_order(n - k, colors):
                out.append(AromaticForest(aromas, (t,)))
    return tuple(sorted(out, key=lambda f: f.key))


@lru_cache(maxsize=None)
def aromatic_forests_of_order(n: int, colors=DEFAULT_COLORS) -> tuple:
    out = []
    for k in range(0, n + 1):
        for aromas in multiaromas_of_order(k, colors):
            for trees in tree_forests_of_order(n - k, colors):
                out.append(AromaticForest(aromas, trees))
    return tuple(sorted(out, key=lambda f: f.key))


@lru_cache(maxsize=None)
def clumped_forests_of_order(n: int, colors=DEFAULT_COLORS) -> tuple:
    if n == 0:
        return (CF_UNIT,)
    out = set()
    for k in range(1, n + 1):
        for clump in aromatic_trees_of_order(k, colors):
            for rest in clumped_forests_of_order(n - k, colors):
                out.add(ClumpedForest(rest.clumps + (clump,)))
    return tuple(sorted(out, key=lambda f: f.key))


def enumerate_forests(order: int, kind: str, colors=DEFAULT_COLORS) -> tuple:
    """Complete, duplicate-free, canonically ordered basis slice."""
    table = {
        "tree": trees_of_order,
        "aroma": aromas_of_order,
        "aromatic-tree": aromatic_trees_of_order,
        "forest": aromatic_forests_of_order,
        "clumped": clumped_forests_of_order,
    }
    if kind not in table:
        raise ValueError(f"unknown kind {kind!r}; expected one of {sorted(table)}")
    return table[kind](order, tuple(colors))


def with_free_edges(obj, q: int) -> tuple:
    """All distinct ways of adding q free edges to the vertices of obj."""
    g0 = to_graph(obj)
    out = set()
    for combo in itertools.combinations_with_replacement(range(g0.n), q):
        g = g0.copy()
        for v in combo:
            g.free[v] += 1
        out.add(_same_shape(obj, from_graph(g)))
    return tuple(sorted(out, key=lambda x: x.key))


@lru_cache(maxsize=None)
def free_edge_objects(order: int, q: int, kind: str, colors=DEFAULT_COLORS) -> tuple:
    """Trees or aromas of the given order carrying exactly q free edges."""
    base = trees_of_order(order, colors) if kind == "tree" else aromas_of_order(order, colors)
    out = set()
    for obj in base:
        out.update(with_free_edges(obj, q))
    return tuple(sorted(out, key=lambda x: x.key))


# ---------------------------------------------------------------------------
# Brute-force automorphism counting, used as the independent sigma oracle.


def sigma_brute(x) -> int:
    """Count digraph automorphisms preserving colors and free-edge counts."""
    g = to_graph(x)
    n = g.n
    count = 0
    for perm in itertools.permutations(range(n)):
        ok = True
        for v in range(n):
            if g.color[v] != g.color[perm[v]] or g.free[v] != g.free[perm[v]]:
                ok = False
                break
            tv = g.out[v]
            if tv is None:
                if g.out[perm[v]] is not None:
                    ok = False
                    break
            elif g.out[perm[v]] != perm[tv]:
                ok = False
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Graftings of a forest onto the free edges of a full trunk (counting side).


def norm_free(x) -> int:
    """||x|| = r! / prod r_v! for an object with r free edges."""
    g = to_graph(x)
    r = sum(g.free)
    denom = 1
    for f in g.free:
        denom *= factorial(f)
    return factorial(r) // denom


def graftings(forest_trees: tuple, abar) -> list:
    """All graftings of a forest of trees onto the free edges of abar.

    A grafting assigns the labeled components to vertices so that each vertex
    v receives exactly as many components as it has free edges; the free
    edges are consumed.  Returns the list of resulting objects (with
    repetitions, one per grafting).
    """
    g0 = to_graph(abar)
    slots = [v for v in range(g0.n) for _ in range(g0.free[v])]
    r = len(slots)
    if r != len(forest_trees):
        return []
    seen_assignments = set()
    results = []
    for perm in itertools.permutations(range(r)):
        assignment = tuple(slots[perm[i]] for i in range(r))
        if assignment in seen_assignments:
            continue
        seen_assignments.add(assignment)
        g = g0.copy()
        for v in range(g.n):
            g.free[v] = 0
        for t, v in zip(forest_trees, assignment):
            _add_tree(g, t, v)
        results.append(_same_shape(abar, from_graph(g)))
    return results
