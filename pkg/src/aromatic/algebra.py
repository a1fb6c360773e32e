"""Exact linear algebra over canonical combinatorial bases.

Everything in this package is a finite formal sum of canonical basis
elements with ``fractions.Fraction`` coefficients.  A basis element is any
immutable object exposing

- ``key``: its canonical text encoding (used for equality, hashing and the
  deterministic term order),
- ``degree``: the grading (vertex count on the graph side, letter count on
  the monomial side),
- ``sigma()``: its symmetry coefficient, a positive integer.

This module provides the generic carriers (:class:`LinComb`,
:class:`Tensor`), the sigma-weighted diagonal pairing, adjoints of graded
linear maps computed slice by slice, the deshuffle coproduct on multisets,
and the recursive antipode of a connected graded bialgebra.

All values are immutable after construction and safe to share across
threads; the enumeration caches used elsewhere are ``lru_cache`` based
(concurrent reads are safe, fills are serialized by the GIL).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Hashable, Iterable, Iterator


class LinComb:
    """A finite formal sum ``sum(coeff * basis_element)`` with exact rational
    coefficients.  Zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    clean[k] = v
        self.terms = clean

    @classmethod
    def lift(cls, key, coeff=1) -> LinComb:
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> LinComb:
        return cls()

    def items(self):
        return self.terms.items()

    def __iter__(self) -> Iterator:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __add__(self, other: LinComb) -> LinComb:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return LinComb(out)

    def __sub__(self, other: LinComb) -> LinComb:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - v
        return LinComb(out)

    def __neg__(self) -> LinComb:
        return LinComb({k: -v for k, v in self.terms.items()})

    def __mul__(self, scale) -> LinComb:
        scale = Fraction(scale)
        return LinComb({k: v * scale for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def apply(self, f: Callable) -> LinComb:
        """Linear extension of ``f: basis element -> LinComb``."""
        out: dict = {}
        for k, v in self.terms.items():
            for k2, v2 in f(k).terms.items():
                out[k2] = out.get(k2, Fraction(0)) + v * v2
        return LinComb(out)

    def map_keys(self, f: Callable) -> LinComb:
        """Linear extension of ``f: basis element -> basis element``."""
        out: dict = {}
        for k, v in self.terms.items():
            k2 = f(k)
            out[k2] = out.get(k2, Fraction(0)) + v
        return LinComb(out)

    def render(self) -> str:
        """Deterministic text form: terms sorted by canonical key."""
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=_key_of):
            c = self.terms[k]
            ks = _key_of(k)
            if c == 1:
                parts.append(ks)
            elif c == -1:
                parts.append("-" + ks)
            else:
                parts.append(f"{c} {ks}")
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return f"LinComb({self.render()})"


def _key_of(obj) -> str:
    return obj.key if hasattr(obj, "key") else str(obj)


class Tensor:
    """A pure tensor ``left (x) right`` of two canonical basis elements."""

    __slots__ = ("left", "right", "key")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.key = f"{_key_of(left)} (x) {_key_of(right)}"

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree

    def sigma(self) -> int:
        return self.left.sigma() * self.right.sigma()

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.key == other.key

    def __hash__(self):
        return hash(("Tensor", self.key))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return self.key


def tensor_product(x: LinComb, y: LinComb) -> LinComb:
    """Tensor of two linear combinations: LinComb over :class:`Tensor` keys."""
    out: dict = {}
    for k1, v1 in x.terms.items():
        for k2, v2 in y.terms.items():
            t = Tensor(k1, k2)
            out[t] = out.get(t, Fraction(0)) + v1 * v2
    return LinComb(out)


def bilinear(f: Callable) -> Callable:
    """Extend a basis-level bilinear operation to linear combinations."""

    def g(x: LinComb, y: LinComb) -> LinComb:
        out = LinComb.zero()
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                out = out + f(k1, k2) * (c1 * c2)
        return out

    return g


def pairing(x: LinComb, y: LinComb, sigma: Callable | None = None) -> Fraction:
    """Diagonal sigma-weighted pairing ``<x, y> = sum sigma(b) x_b y_b``.

    Bilinear and symmetric; an empty overlap gives 0.  ``sigma`` defaults to
    each key's own ``sigma()`` method.
    """
    if len(y.terms) < len(x.terms):
        x, y = y, x
    total = Fraction(0)
    for k, v in x.terms.items():
        w = y.terms.get(k)
        if w is not None:
            s = sigma(k) if sigma is not None else k.sigma()
            total += v * w * s
    return total


def adjoint_on_slice(f: Callable, domain: Iterable) -> Callable:
    """Sigma-adjoint of a graded linear map on one enumerated degree slice.

    ``f`` sends a domain basis element to a LinComb; ``domain`` must be the
    complete basis of the degree slice.  Since the pairing is diagonal, the
    adjoint is ``g(b2) = sum_b1 coeff_{b2}(f(b1)) * sigma(b2)/sigma(b1) * b1``.
    The returned map gives 0 on codomain elements not hit by ``f``, which is
    correct exactly because the slice is complete.
    """
    table: dict = {}
    for b1 in domain:
        for b2, c in f(b1).terms.items():
            table.setdefault(b2, []).append((b1, c))

    def g(b2) -> LinComb:
        out: dict = {}
        for b1, c in table.get(b2, ()):
            out[b1] = out.get(b1, Fraction(0)) + c * Fraction(b2.sigma(), b1.sigma())
        return LinComb(out)

    return g


def group_multiset(items: Iterable) -> list[tuple[Hashable, int]]:
    """Group an iterable of canonical elements into (element, multiplicity)
    pairs, ordered by canonical key."""
    counts: dict = {}
    for it in items:
        counts[it] = counts.get(it, 0) + 1
    return sorted(counts.items(), key=lambda kv: _key_of(kv[0]))


def multiset_splittings(items: tuple) -> list[tuple[tuple, tuple, int]]:
    """All splittings of a multiset into an ordered pair of sub-multisets.

    Returns triples ``(left, right, multiplicity)`` where the multiplicity is
    the product of binomials ``C(r_i, r_i')``, i.e. the deshuffle coefficient.
    """
    groups = group_multiset(items)
    out = []
    choices = [range(r + 1) for _, r in groups]
    for picks in itertools.product(*choices):
        left: list = []
        right: list = []
        mult = 1
        for (elem, r), p in zip(groups, picks):
            left.extend([elem] * p)
            right.extend([elem] * (r - p))
            mult *= comb(r, p)
        out.append((tuple(left), tuple(right), mult))
    return out


def multiset_partitions(items: tuple) -> list[tuple[tuple, ...]]:
    """All partitions of a multiset into unordered nonempty blocks.

    Generated from labeled set partitions and deduplicated, which is cheap at
    the sizes used here (at most 8 elements).
    """
    items = tuple(items)
    n = len(items)
    if n == 0:
        return [()]
    seen = set()
    out = []

    def rec(idx: int, blocks: list[list]):
        if idx == n:
            part = tuple(sorted(tuple(sorted(b, key=_key_of)) for b in blocks))
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
    return out


def multiset_sigma(items: Iterable, inner: Callable | None = None) -> int:
    """Symmetry factor of a multiset: product over isomorphism classes of
    ``multiplicity! * sigma(element)^multiplicity``."""
    total = 1
    for elem, r in group_multiset(items):
        s = inner(elem) if inner is not None else elem.sigma()
        total *= factorial(r) * s**r
    return total


def deshuffle_multiset(items: tuple, rebuild: Callable) -> LinComb:
    """Deshuffle coproduct of a symmetric-algebra basis element.

    ``items`` is the multiset of generators and ``rebuild`` maps a tuple of
    generators back to a canonical basis element.  Coassociative and
    cocommutative by construction of the multinomial multiplicities.
    """
    out: dict = {}
    for left, right, mult in multiset_splittings(items):
        t = Tensor(rebuild(left), rebuild(right))
        out[t] = out.get(t, Fraction(0)) + mult
    return LinComb(out)


class HopfStructure:
    """A connected graded bialgebra given by basis-level product/coproduct.

    ``product`` maps two basis elements to a basis element (all products in
    this package are multiplicative on the canonical bases), ``coproduct``
    maps a basis element to a LinComb over :class:`Tensor`, and ``unit`` is
    the degree-0 basis element.  The antipode is the standard recursion for
    connected graded bialgebras.
    """

    def __init__(self, name: str, product: Callable, coproduct: Callable, unit):
        self.name = name
        self.product = product
        self.coproduct = coproduct
        self.unit = unit
        self._antipode_cache: dict = {}

    def counit(self, x) -> int:
        return 1 if x == self.unit else 0

    def reduced_coproduct(self, x) -> LinComb:
        delta = self.coproduct(x)
        return delta - LinComb({Tensor(x, self.unit): 1, Tensor(self.unit, x): 1})

    def antipode_basis(self, x) -> LinComb:
        """S(unit) = unit; S(x) = -x - sum S(x') x'' over the reduced coproduct."""
        if x == self.unit:
            return LinComb.lift(self.unit)
        if x.degree == 0:
            raise ValueError(f"non-connected input: degree-0 element {x!r} is not the unit")
        cached = self._antipode_cache.get(x)
        if cached is not None:
            return cached
        acc = LinComb.lift(x, -1)
        for t, c in self.reduced_coproduct(x).terms.items():
            for k1, c1 in self.antipode_basis(t.left).terms.items():
                acc = acc + LinComb.lift(self.product(k1, t.right), -c * c1)
        self._antipode_cache[x] = acc
        return acc

    def antipode(self, x: LinComb) -> LinComb:
        return x.apply(self.antipode_basis)

    def convolution_check(self, x) -> bool:
        """m(S (x) id) Delta(x) == unit * counit(x), and the mirror identity."""
        target = LinComb.lift(self.unit, self.counit(x))
        left = LinComb.zero()
        right = LinComb.zero()
        for t, c in self.coproduct(x).terms.items():
            sl = self.antipode_basis(t.left)
            for k1, c1 in sl.terms.items():
                left = left + LinComb.lift(self.product(k1, t.right), c * c1)
            sr = self.antipode_basis(t.right)
            for k2, c2 in sr.terms.items():
                right = right + LinComb.lift(self.product(t.left, k2), c * c2)
        return left == target and right == target
