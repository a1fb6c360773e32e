"""Shared text grammar for forests and monomials.

The grammar is ASCII and bit-exact for golden tests::

    tree      := 'b' [':' name] ['!' int] ['[' tree (',' tree)* ']']
    aroma     := '<' tree (',' tree)* '>'
    forest    := '1' | item (' ' item)*          item := aroma | tree
    clumped   := '1' | '(' forest ')' (' # ' '(' forest ')')*
    letter    := 'x' '(' int [',' name] ')' ['^' int]
    monomial  := '1' | letter (' ' letter)*
    ami       := monomial (' . ' monomial)*      (weight 0 -> aroma slot,
                                                  weight -1 -> root slot)
    cmi       := '1' | '(' ami ')' (' # ' '(' ami ')')*
    lincomb   := ['-'] [coeff] element (('+'|'-') [coeff] element)*
    coeff     := int ['/' int]

Rendering is the canonical ``key`` of each object with terms ordered by key,
so ``parse(kind, lincomb.render())`` round-trips exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LinComb
from .forests import Aroma, AromaticForest, ClumpedForest, RootedTree
from .multiindices import AromaticMI, ClumpedMI, MultiIndex


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"column {pos + 1}: {message}")
        self.pos = pos
        self.message = message


_NAME_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


class _Scanner:
    def __init__(self, text: str, colors=None):
        self.text = text
        self.pos = 0
        self.colors = colors  # None = accept any color name

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def ws(self) -> None:
        while not self.eof() and self.text[self.pos] in " \t":
            self.pos += 1

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            self.pos = start
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def name(self) -> str:
        start = self.pos
        while self.peek() in _NAME_CHARS:
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a name")
        return self.text[start:self.pos]

    def color(self) -> str:
        at = self.pos
        c = self.name()
        if self.colors is not None and c not in self.colors:
            raise ParseError(f"unknown color {c!r}", at)
        return c

    # -- forest side ------------------------------------------------------

    def tree(self) -> RootedTree:
        self.expect("b")
        color = None
        free = 0
        if self.peek() == ":":
            self.pos += 1
            color = self.color()
        if self.peek() == "!":
            self.pos += 1
            free = self.integer()
            if free < 0:
                raise self.error("free-edge count must be nonnegative")
        children = []
        if self.peek() == "[":
            self.pos += 1
            children.append(self.tree())
            while self.peek() == ",":
                self.pos += 1
                children.append(self.tree())
            self.expect("]")
        return RootedTree(children, color, free)

    def aroma(self) -> Aroma:
        self.expect("<")
        trees = [self.tree()]
        while self.peek() == ",":
            self.pos += 1
            trees.append(self.tree())
        self.expect(">")
        return Aroma(trees)

    def forest(self) -> AromaticForest:
        if self.peek() == "1":
            self.pos += 1
            return AromaticForest()
        aromas, trees = [], []
        while True:
            if self.peek() == "<":
                aromas.append(self.aroma())
            elif self.peek() == "b":
                trees.append(self.tree())
            else:
                raise self.error("expected a tree 'b...' or an aroma '<...>'")
            mark = self.pos
            self.ws()
            if self.peek() in ("<", "b"):
                continue
            self.pos = mark
            return AromaticForest(aromas, trees)

    def clumped(self) -> ClumpedForest:
        if self.peek() == "1":
            self.pos += 1
            return ClumpedForest()
        clumps = []
        while True:
            self.expect("(")
            at = self.pos
            f = self.forest()
            if len(f.trees) != 1:
                raise ParseError("a clump must contain exactly one tree", at)
            self.expect(")")
            clumps.append(f)
            mark = self.pos
            self.ws()
            if self.peek() == "#":
                self.pos += 1
                self.ws()
                continue
            self.pos = mark
            return ClumpedForest(clumps)

    # -- monomial side ----------------------------------------------------

    def letter(self) -> MultiIndex:
        self.expect("x")
        self.expect("(")
        j = self.integer()
        if j < -1:
            raise self.error("letter index must be >= -1")
        color = None
        if self.peek() == ",":
            self.pos += 1
            color = self.color()
        self.expect(")")
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.integer()
            if power < 1:
                raise self.error("exponent must be positive")
        return MultiIndex.letter(j, color, power)

    def monomial(self) -> MultiIndex:
        if self.peek() == "1":
            self.pos += 1
            return MultiIndex()
        m = self.letter()
        while True:
            mark = self.pos
            self.ws()
            if self.peek() == "x":
                m = m.add(self.letter())
            else:
                self.pos = mark
                return m

    def ami(self) -> AromaticMI:
        factors = [self.monomial()]
        while True:
            mark = self.pos
            self.ws()
            if self.peek() == ".":
                self.pos += 1
                self.ws()
                factors.append(self.monomial())
            else:
                self.pos = mark
                break
        aromas, roots = [], []
        for f in factors:
            if f.is_empty():
                if len(factors) > 1:
                    raise self.error("empty factor in a product")
                continue
            if f.weight == 0:
                aromas.append(f)
            elif f.weight == -1:
                roots.append(f)
            else:
                raise self.error(
                    f"factor {f.key} has weight {f.weight}, expected 0 or -1"
                )
        return AromaticMI(aromas, roots)

    def cmi(self) -> ClumpedMI:
        if self.peek() == "1":
            self.pos += 1
            return ClumpedMI()
        clumps = []
        while True:
            self.expect("(")
            at = self.pos
            a = self.ami()
            if len(a.roots) != 1:
                raise ParseError("a clump must have exactly one weight -1 factor", at)
            self.expect(")")
            clumps.append(a)
            mark = self.pos
            self.ws()
            if self.peek() == "#":
                self.pos += 1
                self.ws()
                continue
            self.pos = mark
            return ClumpedMI(clumps)


_ELEMENT_PARSERS = {
    "tree": _Scanner.tree,
    "aroma": _Scanner.aroma,
    "forest": _Scanner.forest,
    "clumped": _Scanner.clumped,
    "monomial": _Scanner.monomial,
    "ami": _Scanner.ami,
    "cmi": _Scanner.cmi,
}


def _unit_of(kind: str, sc: _Scanner):
    units = {
        "forest": AromaticForest,
        "clumped": ClumpedForest,
        "monomial": MultiIndex,
        "ami": AromaticMI,
        "cmi": ClumpedMI,
    }
    if kind not in units:
        raise sc.error(f"{kind} has no unit element")
    return units[kind]()


def parse_element(kind: str, text: str, colors=None):
    """Parse a single basis element of the given kind; the whole input must
    be consumed."""
    sc = _Scanner(text, colors)
    sc.ws()
    out = _ELEMENT_PARSERS[kind](sc)
    sc.ws()
    if not sc.eof():
        raise sc.error("unexpected trailing input")
    return out


def parse(kind: str, text: str, colors=None) -> LinComb:
    """Parse a linear combination of elements of the given kind."""
    parser = _ELEMENT_PARSERS[kind]
    sc = _Scanner(text, colors)
    out = LinComb.zero()
    sc.ws()
    sign = 1
    if sc.peek() == "-":
        sc.pos += 1
        sign = -1
        sc.ws()
    if sc.eof():
        raise sc.error("empty input")
    while True:
        coeff = Fraction(sign)
        elem = None
        if sc.peek().isdigit():
            # a leading number is a coefficient when an element follows,
            # otherwise it is a multiple of the unit element ("1", "2", "3/2")
            num = sc.integer()
            if sc.peek() == "/":
                sc.pos += 1
                den = sc.integer()
                if den == 0:
                    raise sc.error("zero denominator")
                frac = Fraction(num, den)
            else:
                frac = Fraction(num)
            sc.ws()
            if sc.eof() or sc.peek() in "+-":
                coeff *= frac
                elem = _unit_of(kind, sc)
            else:
                coeff *= frac
        if elem is None:
            elem = parser(sc)
        out = out + LinComb.lift(elem, coeff)
        sc.ws()
        if sc.eof():
            return out
        op = sc.peek()
        if op not in "+-":
            raise sc.error("expected '+' or '-' between terms")
        sc.pos += 1
        sign = 1 if op == "+" else -1
        sc.ws()
