"""Max-plus polynomials: model, text parser, evaluation, Newton polygon, degree.

A polynomial is a finite map from integer exponent vectors to rational
coefficients; as a function it is max over terms of coeff + <exponent, point>.
Affine polynomials use variables x, y; homogeneous ones use x, y, z and all
exponent sums must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .geometry import (
    IntVec2,
    LatticePolygon,
    Point2,
    as_rational,
    convex_hull,
    format_rational,
)

VARS = ("x", "y", "z")


class ParseError(ValueError):
    """Syntax or arity error, carrying the 0-based offset in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class TropicalPolynomial:
    """Immutable term map.  terms is canonically sorted by exponent."""

    terms: tuple[tuple[tuple[int, ...], Fraction], ...]
    nvars: int

    @staticmethod
    def from_terms(mapping: Mapping[tuple[int, ...], Fraction] | Iterable, nvars: int) -> "TropicalPolynomial":
        """Build from (exponent -> coefficient) pairs, merging duplicate
        exponents by max (the tropical sum of like monomials)."""
        merged: dict[tuple[int, ...], Fraction] = {}
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        for expo, coeff in items:
            expo = tuple(int(e) for e in expo)
            coeff = as_rational(coeff)
            if len(expo) != nvars:
                raise ValueError(f"exponent {expo} does not have {nvars} entries")
            if expo in merged:
                merged[expo] = max(merged[expo], coeff)
            else:
                merged[expo] = coeff
        if not merged:
            raise ValueError("a tropical polynomial needs at least one term")
        if nvars == 3:
            sums = {sum(e) for e in merged}
            if len(sums) > 1:
                raise ValueError(f"not homogeneous: exponent sums {sorted(sums)}")
        elif nvars != 2:
            raise ValueError("only 2 (affine) or 3 (homogeneous) variables supported")
        return TropicalPolynomial(tuple(sorted(merged.items())), nvars)

    @property
    def is_homogeneous(self) -> bool:
        return self.nvars == 3

    @property
    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, expo: tuple[int, ...]) -> Fraction:
        for e, c in self.terms:
            if e == expo:
                return c
        raise KeyError(expo)

    def __str__(self):
        return format_poly(self)


def _coords(p, nvars: int) -> tuple[Fraction, ...]:
    if isinstance(p, Point2):
        coords = (p.x, p.y)
    else:
        coords = tuple(as_rational(c) for c in p)
    if len(coords) != nvars:
        raise ValueError(f"point has {len(coords)} coordinates, polynomial has {nvars} variables")
    return coords


def evaluate(f: TropicalPolynomial, p) -> Fraction:
    """Exact max over terms of coeff + <exponent, p>."""
    coords = _coords(p, f.nvars)
    return max(c + sum(e * v for e, v in zip(expo, coords)) for expo, c in f.terms)


def argmax_terms(f: TropicalPolynomial, p) -> frozenset[tuple[int, ...]]:
    """Exponent vectors whose terms attain the maximum at p."""
    coords = _coords(p, f.nvars)
    values = [(c + sum(e * v for e, v in zip(expo, coords)), expo) for expo, c in f.terms]
    best = max(v for v, _ in values)
    return frozenset(expo for v, expo in values if v == best)


# ---------------------------------------------------------------------------
# parser: poly := term ('+' term)*, term := factor ('*' factor)*,
# factor := coeff | var power?, power := '^' int,
# coeff := ['-'] (int ['/' posint] | '(' coeff ')')

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def coeff(self) -> Fraction:
        ch = self.peek()
        if ch == "(":
            self.take("(")
            value = self.coeff()
            self.take(")")
            return value
        if ch == "-":
            mark = self.pos
            self.pos += 1
            if self.peek() == "(":
                self.take("(")
                value = self.coeff()
                self.take(")")
                return -value
            self.pos = mark
        num = self.integer()
        if self.peek() == "/":
            self.take("/")
            den = self.integer()
            if den <= 0:
                raise self.error("denominator must be positive")
            return Fraction(num, den)
        return Fraction(num)

    def factor(self) -> tuple[Fraction, dict[str, int]]:
        ch = self.peek()
        if ch in VARS:
            self.pos += 1
            power = 1
            if self.peek() == "^":
                self.take("^")
                power = self.integer()
            return Fraction(0), {ch: power}
        if ch == "" :
            raise self.error("unexpected end of input")
        if ch.isdigit() or ch == "-" or ch == "(":
            return self.coeff(), {}
        raise self.error(f"unexpected character {ch!r}")

    def term(self) -> tuple[Fraction, dict[str, int]]:
        coeff, expo = self.factor()
        while self.peek() == "*":
            self.take("*")
            c2, e2 = self.factor()
            coeff += c2
            for var, p in e2.items():
                expo[var] = expo.get(var, 0) + p
        return coeff, expo

    def poly(self) -> list[tuple[Fraction, dict[str, int]]]:
        terms = [self.term()]
        while self.peek() == "+":
            self.take("+")
            terms.append(self.term())
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected character {self.text[self.pos]!r}")
        return terms


def parse(text: str, arity: str | None = None) -> TropicalPolynomial:
    """Parse max-plus polynomial text.

    '+' is tropical max, '*' adds coefficients and exponents; a term with no
    explicit coefficient gets 0 (the multiplicative identity).  arity is
    "affine", "homogeneous", or None to infer from the presence of z.
    """
    if arity not in (None, "affine", "homogeneous"):
        raise ValueError(f"unknown arity {arity!r}")
    parser = _Parser(text)
    parser.skip_ws()
    if parser.pos == len(text):
        raise ParseError("empty input", 0)
    raw = parser.poly()
    uses_z = any("z" in expo for _, expo in raw)
    if arity == "affine" and uses_z:
        position = text.index("z")
        raise ParseError("variable z in a polynomial declared affine", position)
    nvars = 3 if (arity == "homogeneous" or (arity is None and uses_z)) else 2
    names = VARS[:nvars]
    terms = []
    for coeff, expo in raw:
        terms.append((tuple(expo.get(v, 0) for v in names), coeff))
    try:
        return TropicalPolynomial.from_terms(terms, nvars)
    except ValueError as exc:
        raise ParseError(str(exc), len(text)) from exc


def format_poly(f: TropicalPolynomial) -> str:
    """Canonical text form; parse(format_poly(f)) == f."""
    names = VARS[:f.nvars]
    parts = []
    for expo, coeff in sorted(f.terms, key=lambda t: t[0], reverse=True):
        factors = []
        if coeff != 0 or all(e == 0 for e in expo):
            text = format_rational(coeff)
            factors.append(f"({text})" if coeff < 0 else text)
        for name, e in zip(names, expo):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Newton polygon, degree, homogenization

def newton_polygon(f: TropicalPolynomial) -> LatticePolygon:
    """Convex hull of the support (of the dehomogenization, if f uses z)."""
    g = dehomogenize(f) if f.is_homogeneous else f
    return convex_hull(g.support)


@dataclass(frozen=True)
class DegreeReport:
    """Degree data for the translation-normalized Newton polygon."""

    degree: int
    full_support: bool
    normalized_polygon: LatticePolygon
    translation_used: tuple[int, int]


def _standard_simplex(d: int) -> LatticePolygon:
    if d == 0:
        return LatticePolygon(((0, 0),), 0)
    return convex_hull([(0, 0), (d, 0), (0, d)])


def curve_degree(f: TropicalPolynomial) -> DegreeReport:
    """Smallest d such that the Newton polygon, translated so its
    componentwise minima sit on the axes, fits in the corner triangle with
    legs d.  Full support means the translated polygon equals that triangle."""
    g = dehomogenize(f) if f.is_homogeneous else f
    support = g.support
    tx = -min(e[0] for e in support)
    ty = -min(e[1] for e in support)
    polygon = convex_hull(support).translated(tx, ty)
    degree = max(x + y for x, y in polygon.vertices)
    full = polygon == _standard_simplex(degree)
    return DegreeReport(degree, full, polygon, (tx, ty))


def dehomogenize(f: TropicalPolynomial) -> TropicalPolynomial:
    """Set z = 0: drop the third exponent.  f(x, y) = F(x, y, 0)."""
    if not f.is_homogeneous:
        raise ValueError("dehomogenize expects a homogeneous polynomial")
    return TropicalPolynomial.from_terms(
        [((a, b), c) for (a, b, _), c in f.terms], 2)


def homogenize(f: TropicalPolynomial, degree: int) -> TropicalPolynomial:
    """Pad each exponent (a, b) with z^(degree - a - b)."""
    if f.is_homogeneous:
        raise ValueError("polynomial is already homogeneous")
    worst = max(a + b for a, b in f.support)
    if degree < worst:
        raise ValueError(f"cannot homogenize to degree {degree}: a term has exponent sum {worst}")
    return TropicalPolynomial.from_terms(
        [((a, b, degree - a - b), c) for (a, b), c in f.terms], 3)


def translate_curve(f: TropicalPolynomial, dx: Fraction, dy: Fraction) -> TropicalPolynomial:
    """Polynomial whose variety is V(f) translated by (dx, dy):
    each coefficient drops by <exponent, (dx, dy)>."""
    if f.is_homogeneous:
        raise ValueError("translate the affine (z = 0) form")
    dx, dy = as_rational(dx), as_rational(dy)
    return TropicalPolynomial.from_terms(
        [((a, b), c - (a * dx + b * dy)) for (a, b), c in f.terms], 2)
