"""Multi-indices: the free aromatic Novikov algebra and the LOT structure.

A multi-index is a finitely supported exponent vector over the letters
``x_j^a`` with ``j >= -1`` and color ``a``.  The weight of a monomial is
``sum j * k_j^a``; monomials of weight 0 play the role of aromas, monomials
of weight -1 the role of trees.  The aromatic monomials are
``S(M_0) (x) M_-1``, the analogue of aromatic forests is
``S(M_0) (x) S(M_-1)`` and the clumped monomials are symmetric products of
aromatic monomials.

The module provides weight/degree/factorial bookkeeping, the derivation
``partial`` and the transpose derivation ``partialbar`` (with its iterated
closed form), the Novikov product and the anchor of the pre-Lie-Rinehart
structure, admissible cuts of monomials, the aromatic and clumped LOT
coproducts, and the projection ``phi`` with its sigma-adjoint.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import LinComb, Tensor, multiset_sigma, multiset_splittings

DEFAULT_COLORS = (None,)


def _letter_sort_key(letter):
    j, color = letter
    return (j, color is not None, color or "")


def _letter_str(letter, power: int) -> str:
    j, color = letter
    inner = str(j) if color is None else f"{j},{color}"
    s = f"x({inner})"
    if power != 1:
        s += f"^{power}"
    return s


class MultiIndex:
    """A monomial ``prod (x_j^a)^k``; the empty monomial is the unit ``1``."""

    __slots__ = ("entries", "key", "degree", "weight", "_fact")

    def __init__(self, entries=()):
        if isinstance(entries, dict):
            entries = entries.items()
        clean = {}
        for letter, k in entries:
            j = letter[0]
            if j < -1:
                raise ValueError(f"letter index must be >= -1, got {j}")
            if k:
                clean[letter] = clean.get(letter, 0) + k
        for letter, k in clean.items():
            if k < 0:
                raise ValueError(f"negative exponent for {letter}")
        self.entries = tuple(sorted(
            ((l, k) for l, k in clean.items() if k), key=lambda e: _letter_sort_key(e[0])
        ))
        self.key = " ".join(_letter_str(l, k) for l, k in self.entries) or "1"
        self.degree = sum(k for _, k in self.entries)
        self.weight = sum(l[0] * k for l, k in self.entries)
        self._fact = None

    @classmethod
    def letter(cls, j: int, color=None, power: int = 1) -> MultiIndex:
        return cls((((j, color), power),))

    def is_empty(self) -> bool:
        return not self.entries

    def mfact(self) -> int:
        """kappa! = product of exponent factorials."""
        if self._fact is None:
            f = 1
            for _, k in self.entries:
                f *= factorial(k)
            self._fact = f
        return self._fact

    def sigma(self) -> int:
        return self.mfact()

    def get(self, letter) -> int:
        for l, k in self.entries:
            if l == letter:
                return k
        return 0

    def add(self, other: MultiIndex) -> MultiIndex:
        d = dict(self.entries)
        for l, k in other.entries:
            d[l] = d.get(l, 0) + k
        return MultiIndex(d)

    def sub_or_none(self, other: MultiIndex) -> MultiIndex | None:
        d = dict(self.entries)
        for l, k in other.entries:
            d[l] = d.get(l, 0) - k
            if d[l] < 0:
                return None
        return MultiIndex(d)

    def shift(self, offset: int) -> MultiIndex:
        """Move every letter index by ``offset`` (used by the closed form)."""
        return MultiIndex((((j + offset, c), k) for (j, c), k in self.entries))

    def letters(self):
        return self.entries

    def __eq__(self, other):
        return isinstance(other, MultiIndex) and self.entries == other.entries

    def __hash__(self):
        return hash(("MI", self.entries))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


MI_UNIT = MultiIndex()


class AromaticMI:
    """A symmetric product of monomials split into aroma slots and root
    slots.

    For the plain spaces the aroma factors have weight 0 and the root factors
    weight -1, in which case the rendering alone determines the element.  The
    free-edge variants reuse the same container with shifted weights; there
    equality is by slot structure, which the rendering does not show.
    """

    __slots__ = ("aromas", "roots", "key", "degree", "weight", "_sigma")

    def __init__(self, aromas=(), roots=()):
        self.aromas = tuple(sorted(aromas, key=lambda m: m.key))
        self.roots = tuple(sorted(roots, key=lambda m: m.key))
        parts = [m.key for m in self.aromas] + [m.key for m in self.roots]
        self.key = " . ".join(parts) if parts else "1"
        self.degree = sum(m.degree for m in self.aromas) + sum(m.degree for m in self.roots)
        self.weight = sum(m.weight for m in self.aromas) + sum(m.weight for m in self.roots)
        self._sigma = None

    def is_unit(self) -> bool:
        return not self.aromas and not self.roots

    def sigma(self) -> int:
        if self._sigma is None:
            self._sigma = multiset_sigma(self.aromas) * multiset_sigma(self.roots)
        return self._sigma

    def mul(self, other: AromaticMI) -> AromaticMI:
        return AromaticMI(self.aromas + other.aromas, self.roots + other.roots)

    def __eq__(self, other):
        return (
            isinstance(other, AromaticMI)
            and self.aromas == other.aromas
            and self.roots == other.roots
        )

    def __hash__(self):
        return hash(("AMI", self.aromas, self.roots))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


AMI_UNIT = AromaticMI()


def aromatic_monomial(aromas, root: MultiIndex) -> AromaticMI:
    """An element of the aromatic Novikov algebra: aroma part and one root."""
    return AromaticMI(tuple(aromas), (root,))


def require_plain(x: AromaticMI, what: str = "monomial"):
    """Plain spaces: aroma factors of weight 0, root factors of weight -1."""
    for m in x.aromas:
        if m.weight != 0:
            raise ValueError(
                f"{what}: aroma factor {m.key} has weight {m.weight}, expected 0"
            )
    for m in x.roots:
        if m.weight != -1:
            raise ValueError(
                f"{what}: root factor {m.key} has weight {m.weight}, expected -1"
            )


class ClumpedMI:
    """A symmetric ``#``-product of aromatic monomials (one root each)."""

    __slots__ = ("clumps", "key", "degree", "_sigma")

    def __init__(self, clumps=()):
        for c in clumps:
            if len(c.roots) != 1:
                raise ValueError(f"clump must have exactly one root factor: {c!r}")
        self.clumps = tuple(sorted(clumps, key=lambda c: c.key))
        self.key = " # ".join(f"({c.key})" for c in self.clumps) if self.clumps else "1"
        self.degree = sum(c.degree for c in self.clumps)
        self._sigma = None

    def is_unit(self) -> bool:
        return not self.clumps

    def sigma(self) -> int:
        if self._sigma is None:
            self._sigma = multiset_sigma(self.clumps)
        return self._sigma

    def mul(self, other: ClumpedMI) -> ClumpedMI:
        return ClumpedMI(self.clumps + other.clumps)

    def __eq__(self, other):
        return isinstance(other, ClumpedMI) and self.clumps == other.clumps

    def __hash__(self):
        return hash(("CMI", self.clumps))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


CMI_UNIT = ClumpedMI()


# ---------------------------------------------------------------------------
# Derivations.


def partial_mi(m: MultiIndex) -> LinComb:
    """partial x^k = sum_j k_j x^(k - e_j + e_{j+1}); raises weight by 1."""
    out: dict = {}
    for (j, c), k in m.entries:
        target = m.sub_or_none(MultiIndex.letter(j, c)).add(MultiIndex.letter(j + 1, c))
        out[target] = out.get(target, Fraction(0)) + k
    return LinComb(out)


def partialbar_mi(m: MultiIndex) -> LinComb:
    """partialbar x^k = sum_{j>=0} k_j x^(k - e_j + e_{j-1}); lowers weight."""
    out: dict = {}
    for (j, c), k in m.entries:
        if j >= 0:
            target = m.sub_or_none(MultiIndex.letter(j, c)).add(MultiIndex.letter(j - 1, c))
            out[target] = out.get(target, Fraction(0)) + k
    return LinComb(out)


def _derive_ami(x: AromaticMI, base) -> LinComb:
    """Extend a derivation on monomials over the ``.``-factors of x."""
    out = LinComb.zero()
    for i, m in enumerate(x.aromas):
        for m2, c in base(m).terms.items():
            out = out + LinComb.lift(
                AromaticMI(x.aromas[:i] + (m2,) + x.aromas[i + 1 :], x.roots), c
            )
    for i, m in enumerate(x.roots):
        for m2, c in base(m).terms.items():
            out = out + LinComb.lift(
                AromaticMI(x.aromas, x.roots[:i] + (m2,) + x.roots[i + 1 :]), c
            )
    return out


def partial(x) -> LinComb:
    if isinstance(x, MultiIndex):
        return partial_mi(x)
    return _derive_ami(x, partial_mi)


def partialbar(x) -> LinComb:
    if isinstance(x, MultiIndex):
        return partialbar_mi(x)
    return _derive_ami(x, partialbar_mi)


def partialbar_iter(x, r: int) -> LinComb:
    """r-fold application of partialbar (the defining oracle)."""
    acc = LinComb.lift(x)
    for _ in range(r):
        acc = acc.apply(partialbar)
    return acc


def _positions_below(m: MultiIndex) -> tuple:
    """Candidate decrement positions: every (j', a) with 0 <= j' <= j for
    some letter (j, a) of m."""
    seen = set()
    for (j, c), _ in m.entries:
        for jp in range(0, j + 1):
            seen.add((jp, c))
    return tuple(sorted(seen, key=_letter_sort_key))


def _closed_coeff(m: MultiIndex, ell: MultiIndex) -> int:
    """C_{k,l} of the iterated transpose derivation, by the recursion
    C_{k,l} = sum_t C_{k, l - e_t} (k_t - l_t + 1 + l_{t+1}), C_{k,0} = 1."""
    memo: dict = {}

    def rec(e: MultiIndex) -> int:
        if e.is_empty():
            return 1
        got = memo.get(e)
        if got is not None:
            return got
        total = 0
        for (t, a), lt in e.entries:
            prev = e.sub_or_none(MultiIndex.letter(t, a))
            total += rec(prev) * (m.get((t, a)) - lt + 1 + e.get((t + 1, a)))
        memo[e] = total
        return total

    return rec(ell)


def _ell_profiles(m: MultiIndex, r: int):
    positions = _positions_below(m)
    if r == 0:
        yield MI_UNIT
        return
    for combo in itertools.combinations_with_replacement(positions, r):
        counts: dict = {}
        for p in combo:
            counts[p] = counts.get(p, 0) + 1
        yield MultiIndex(counts)


def partialbar_pow_mi(m: MultiIndex, r: int) -> LinComb:
    """Closed form of partialbar^r on a single monomial."""
    out: dict = {}
    for ell in _ell_profiles(m, r):
        c = _closed_coeff(m, ell)
        if not c:
            continue
        # target = m - ell + (ell shifted down one position)
        d = dict(m.entries)
        for (j, a), k in ell.entries:
            d[(j, a)] = d.get((j, a), 0) - k
            d[(j - 1, a)] = d.get((j - 1, a), 0) + k
        if any(v < 0 for v in d.values()):
            raise ArithmeticError(f"nonzero coefficient with invalid shift: {m} {ell}")
        target = MultiIndex(d)
        out[target] = out.get(target, Fraction(0)) + c
    return LinComb(out)


def partialbar_pow(x, r: int) -> LinComb:
    """Closed form of partialbar^r; on products the per-factor profiles are
    interleaved with a multinomial coefficient."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if isinstance(x, MultiIndex):
        return partialbar_pow_mi(x, r)
    factors = [("a", m) for m in x.aromas] + [("r", m) for m in x.roots]
    out = LinComb.zero()
    for sizes in _compositions_nonneg(r, len(factors)):
        mult = factorial(r)
        for s in sizes:
            mult //= factorial(s)
        pieces = [partialbar_pow_mi(m, s) for (_, m), s in zip(factors, sizes)]
        for combo in itertools.product(*(p.terms.items() for p in pieces)):
            coeff = Fraction(mult)
            ar, ro = [], []
            for (slot, _), (mi, c) in zip(factors, combo):
                coeff *= c
                (ar if slot == "a" else ro).append(mi)
            out = out + LinComb.lift(AromaticMI(ar, ro), coeff)
    return out


def _compositions_nonneg(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_nonneg(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Novikov product and anchor.


def novikov(x: AromaticMI, y: AromaticMI) -> LinComb:
    """x > y = Leibniz extension of P > Q = P * partial(Q) over the aroma
    factors; stays in the aromatic Novikov algebra."""
    if len(x.roots) != 1 or len(y.roots) != 1:
        raise ValueError("novikov expects aromatic monomials (one root factor each)")
    xr = x.roots[0]
    out = LinComb.zero()
    for i, kappa in enumerate(y.aromas):
        for m2, c in partial_mi(kappa).terms.items():
            aromas = x.aromas + y.aromas[:i] + (xr.add(m2),) + y.aromas[i + 1 :]
            out = out + LinComb.lift(AromaticMI(aromas, y.roots), c)
    for m2, c in partial_mi(y.roots[0]).terms.items():
        out = out + LinComb.lift(AromaticMI(x.aromas + y.aromas, (xr.add(m2),)), c)
    return out


def anchor(x: AromaticMI, y: AromaticMI) -> LinComb:
    """rho(x)(y) for a multiaroma y: derivation action landing in S(M_0)."""
    if len(x.roots) != 1:
        raise ValueError("anchor expects an aromatic monomial on the left")
    if y.roots:
        raise ValueError("anchor acts on multiaromas (no root factors)")
    xr = x.roots[0]
    out = LinComb.zero()
    for i, kappa in enumerate(y.aromas):
        for m2, c in partial_mi(kappa).terms.items():
            aromas = x.aromas + y.aromas[:i] + (xr.add(m2),) + y.aromas[i + 1 :]
            out = out + LinComb.lift(AromaticMI(aromas, ()), c)
    return out


def lie_bracket(x: AromaticMI, y: AromaticMI) -> LinComb:
    return novikov(x, y) - novikov(y, x)


# ---------------------------------------------------------------------------
# Admissible cuts of monomials and the LOT coproducts.


def _weight_minus1_subs(m: MultiIndex) -> tuple:
    """All nonempty sub-multi-indices of m with weight -1."""
    letters = m.entries
    ranges = [range(k + 1) for _, k in letters]
    out = []
    for picks in itertools.product(*ranges):
        if not any(picks):
            continue
        sub = MultiIndex(((l, p) for (l, _), p in zip(letters, picks)))
        if sub.weight == -1:
            out.append(sub)
    return tuple(sorted(out, key=lambda s: s.key))


def monomial_cuts(m: MultiIndex) -> list[tuple[tuple, MultiIndex, int]]:
    """Admissible cut classes of a monomial: (extracted parts, remainder,
    multiplicity).  Parts are weight -1, the multiplicity is
    ``m! / (rest! * prod parts! * sigma_ext(parts))``, and the empty cut is
    included (parts = (), multiplicity 1)."""
    out = []

    def rec(rest: MultiIndex, parts: tuple, min_key: str):
        count = Fraction(m.mfact(), rest.mfact())
        for p in parts:
            count /= p.mfact()
        count /= multiset_sigma(parts, inner=lambda _p: 1)
        if count.denominator != 1:
            raise ArithmeticError(f"non-integer cut multiplicity for {m}")
        out.append((parts, rest, int(count)))
        for sub in _weight_minus1_subs(rest):
            if sub.key < min_key:
                continue
            rec(rest.sub_or_none(sub), parts + (sub,), sub.key)

    rec(m, (), "")
    return out


def _lot_factor(m: MultiIndex, is_aroma: bool) -> LinComb:
    slot = (lambda mi: AromaticMI((mi,), ())) if is_aroma else (lambda mi: AromaticMI((), (mi,)))
    out: dict = {}
    full = Tensor(slot(m), AMI_UNIT)
    out[full] = Fraction(1)
    for parts, rest, count in monomial_cuts(m):
        right = partialbar_iter(rest, len(parts))
        left = AromaticMI((), parts)
        for mi, c in right.terms.items():
            t = Tensor(left, slot(mi))
            out[t] = out.get(t, Fraction(0)) + count * c
    return LinComb(out)


def _tensor_mul_ami(acc: LinComb, factor: LinComb) -> LinComb:
    out: dict = {}
    for t1, c1 in acc.terms.items():
        for t2, c2 in factor.terms.items():
            t = Tensor(t1.left.mul(t2.left), t1.right.mul(t2.right))
            out[t] = out.get(t, Fraction(0)) + c1 * c2
    return LinComb(out)


def lot_aro(x: AromaticMI) -> LinComb:
    """Aromatic LOT coproduct, extended as a unital morphism over the
    ``.``-factors.  Extracted parts are weight -1 and the trunk side applies
    the iterated transpose derivation to the remainder."""
    require_plain(x, "lot-aro")
    result = LinComb.lift(Tensor(AMI_UNIT, AMI_UNIT))
    for kappa in x.aromas:
        result = _tensor_mul_ami(result, _lot_factor(kappa, True))
    for k in x.roots:
        result = _tensor_mul_ami(result, _lot_factor(k, False))
    return result


def phi_proj(x: ClumpedMI) -> AromaticMI:
    """Forget the clumping."""
    out = AMI_UNIT
    for c in x.clumps:
        out = out.mul(c)
    return out


def phi_star(x: AromaticMI) -> LinComb:
    """Sigma-adjoint of the projection: distribute each aroma factor
    instance onto one of the root instances; zero when there are aroma
    factors but no root factor."""
    require_plain(x, "phi-star")
    if x.aromas and not x.roots:
        return LinComb.zero()
    out: dict = {}
    for assignment in itertools.product(range(len(x.roots)), repeat=len(x.aromas)):
        buckets: list[list[MultiIndex]] = [[] for _ in x.roots]
        for kappa, slot in zip(x.aromas, assignment):
            buckets[slot].append(kappa)
        cm = ClumpedMI(tuple(
            aromatic_monomial(b, r) for b, r in zip(buckets, x.roots)
        ))
        out[cm] = out.get(cm, Fraction(0)) + 1
    return LinComb(out)


def lot_cl(x: ClumpedMI) -> LinComb:
    """Clumped LOT coproduct: push the extracted side of the aromatic
    coproduct through phi_star, keep the trunk as one clump, and drop the
    terms whose trunk is a multiaroma alone."""
    result = LinComb.lift(Tensor(CMI_UNIT, CMI_UNIT))
    for clump in x.clumps:
        factor = LinComb.zero()
        for t, c in lot_aro(clump).terms.items():
            right = t.right
            if right.is_unit():
                rcm = CMI_UNIT
            elif right.roots:
                rcm = ClumpedMI((right,))
            else:
                continue
            for lcm, c2 in phi_star(t.left).terms.items():
                factor = factor + LinComb.lift(Tensor(lcm, rcm), c * c2)
        result = _tensor_mul_cmi(result, factor)
    return result


def _tensor_mul_cmi(acc: LinComb, factor: LinComb) -> LinComb:
    out: dict = {}
    for t1, c1 in acc.terms.items():
        for t2, c2 in factor.terms.items():
            t = Tensor(t1.left.mul(t2.left), t1.right.mul(t2.right))
            out[t] = out.get(t, Fraction(0)) + c1 * c2
    return LinComb(out)


def deshuffle_ami(x: AromaticMI) -> LinComb:
    out: dict = {}
    for la, ra, ma in multiset_splittings(x.aromas):
        for lr, rr, mr in multiset_splittings(x.roots):
            t = Tensor(AromaticMI(la, lr), AromaticMI(ra, rr))
            out[t] = out.get(t, Fraction(0)) + ma * mr
    return LinComb(out)


# ---------------------------------------------------------------------------
# Graded slices.


@lru_cache(maxsize=None)
def monomials_of(degree: int, weight: int, colors=DEFAULT_COLORS) -> tuple:
    """All monomials with the given letter count and weight."""
    out = []

    def rec(count: int, wt: int, min_pos, acc: dict):
        if count == 0:
            if wt == 0:
                out.append(MultiIndex(dict(acc)))
            return
        # letters are chosen with (j, color) non-decreasing, so the count
        # remaining letters are all >= j and j*count <= wt bounds the index
        for j in range(min_pos[0], wt // count + 1):
            cstart = min_pos[1] if j == min_pos[0] else 0
            for ci in range(cstart, len(colors)):
                letter = (j, colors[ci])
                acc[letter] = acc.get(letter, 0) + 1
                rec(count - 1, wt - j, (j, ci), acc)
                acc[letter] -= 1

    rec(degree, weight, (-1, 0), {})
    return tuple(sorted(out, key=lambda m: m.key))


def m0_of_degree(d: int, colors=DEFAULT_COLORS) -> tuple:
    return monomials_of(d, 0, colors)


def m_minus1_of_degree(d: int, colors=DEFAULT_COLORS) -> tuple:
    return monomials_of(d, -1, colors)


@lru_cache(maxsize=None)
def _multisets_with_total(degree: int, slice_fn_name: str, colors=DEFAULT_COLORS) -> tuple:
    slice_fn = {"m0": m0_of_degree, "m-1": m_minus1_of_degree}[slice_fn_name]
    if degree == 0:
        return ((),)
    out = set()
    for k in range(1, degree + 1):
        for m in slice_fn(k, colors):
            for rest in _multisets_with_total(degree - k, slice_fn_name, colors):
                out.add(tuple(sorted(rest + (m,), key=lambda s: s.key)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def ami_of_degree(d: int, colors=DEFAULT_COLORS) -> tuple:
    """Basis slice of S(M_0) (x) S(M_-1) at the given total degree."""
    out = []
    for k in range(0, d + 1):
        for aromas in _multisets_with_total(k, "m0", colors):
            for roots in _multisets_with_total(d - k, "m-1", colors):
                out.append(AromaticMI(aromas, roots))
    return tuple(sorted(out, key=lambda x: (x.key, len(x.aromas))))


@lru_cache(maxsize=None)
def am_minus1_of_degree(d: int, colors=DEFAULT_COLORS) -> tuple:
    """Aromatic monomials (exactly one root factor) of the given degree."""
    out = []
    for kr in range(1, d + 1):
        for root in m_minus1_of_degree(kr, colors):
            for aromas in _multisets_with_total(d - kr, "m0", colors):
                out.append(AromaticMI(aromas, (root,)))
    return tuple(sorted(out, key=lambda x: x.key))


@lru_cache(maxsize=None)
def cmi_of_degree(d: int, colors=DEFAULT_COLORS) -> tuple:
    if d == 0:
        return (CMI_UNIT,)
    out = set()
    for k in range(1, d + 1):
        for clump in am_minus1_of_degree(k, colors):
            for rest in cmi_of_degree(d - k, colors):
                out.add(ClumpedMI(rest.clumps + (clump,)))
    return tuple(sorted(out, key=lambda x: x.key))
