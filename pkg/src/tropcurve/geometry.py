"""Exact rational scalars and 2D lattice-geometry primitives.

Everything here is pure and immutable; no floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

IntPoint = tuple[int, int]


def as_rational(value) -> Fraction:
    """Coerce ints, strings like "3" or "-3/4", and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Render as "n" or "n/d"; inverse of as_rational."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Point2:
    """A point of the affine plane with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __add__(self, v: "IntVec2") -> "Point2":
        return Point2(self.x + v.dx, self.y + v.dy)

    def translated(self, dx, dy) -> "Point2":
        return Point2(self.x + dx, self.y + dy)

    def __repr__(self):
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


def point(x, y) -> Point2:
    return Point2(as_rational(x), as_rational(y))


@dataclass(frozen=True)
class IntVec2:
    """An integer vector, used for lattice directions and edge duals."""

    dx: int
    dy: int

    def __neg__(self) -> "IntVec2":
        return IntVec2(-self.dx, -self.dy)

    def scaled(self, k: int) -> "IntVec2":
        return IntVec2(k * self.dx, k * self.dy)

    def perp(self) -> "IntVec2":
        """Rotate by -90 degrees: (dx, dy) -> (dy, -dx)."""
        return IntVec2(self.dy, -self.dx)

    def is_primitive(self) -> bool:
        return (self.dx, self.dy) != (0, 0) and math.gcd(abs(self.dx), abs(self.dy)) == 1

    def __repr__(self):
        return f"<{self.dx}, {self.dy}>"


def primitive(v) -> tuple[IntVec2, int]:
    """Split an integer vector as k * p with p primitive and k >= 1.

    Accepts an IntVec2 or an (int, int) pair.  The zero vector is rejected.
    """
    dx, dy = (v.dx, v.dy) if isinstance(v, IntVec2) else (int(v[0]), int(v[1]))
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    k = math.gcd(abs(dx), abs(dy))
    return IntVec2(dx // k, dy // k), k


def det2(u: IntVec2, v: IntVec2) -> int:
    """Determinant |u v| = u.dx * v.dy - u.dy * v.dx."""
    return u.dx * v.dy - u.dy * v.dx


def cross(ox, oy, ax, ay, bx, by):
    """(a - o) x (b - o); works for ints and Fractions alike."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def rational_direction(dx: Fraction, dy: Fraction) -> tuple[IntVec2, Fraction]:
    """Write a nonzero rational vector as t * p with p a primitive integer
    vector and t > 0 rational.  This is the lattice-length decomposition."""
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    dx, dy = Fraction(dx), Fraction(dy)
    scale = dx.denominator * dy.denominator // math.gcd(dx.denominator, dy.denominator)
    p, k = primitive((int(dx * scale), int(dy * scale)))
    return p, Fraction(k, scale)


def segment_lattice_length(a: Point2, b: Point2) -> Fraction:
    """Lattice length of the segment [a, b]: the t with b - a = t * primitive."""
    if a == b:
        return Fraction(0)
    _, t = rational_direction(b.x - a.x, b.y - a.y)
    return t


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of integer points, counter-clockwise, starting at the
    lexicographically smallest vertex.  No three consecutive vertices are
    collinear.  dimension is 2 for a proper polygon, 1 for a segment,
    0 for a single point."""

    vertices: tuple[IntPoint, ...]
    dimension: int

    def edge_vectors(self) -> list[IntVec2]:
        """Boundary edge vectors in CCW order (for a segment: there and back)."""
        n = len(self.vertices)
        if self.dimension == 0:
            return []
        if self.dimension == 1:
            a, b = self.vertices
            return [IntVec2(b[0] - a[0], b[1] - a[1]), IntVec2(a[0] - b[0], a[1] - b[1])]
        out = []
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            out.append(IntVec2(b[0] - a[0], b[1] - a[1]))
        return out

    def sides(self) -> list[tuple[IntPoint, IntPoint]]:
        """Boundary sides between consecutive corners (empty for dimension 0,
        the single segment for dimension 1)."""
        if self.dimension == 0:
            return []
        if self.dimension == 1:
            return [(self.vertices[0], self.vertices[1])]
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def translated(self, dx: int, dy: int) -> "LatticePolygon":
        return LatticePolygon(tuple((x + dx, y + dy) for x, y in self.vertices), self.dimension)

    def contains(self, px, py, strict: bool = False) -> bool:
        """Exact membership test; strict=True asks for the interior."""
        if self.dimension == 0:
            vx, vy = self.vertices[0]
            return not strict and px == vx and py == vy
        if self.dimension == 1:
            if strict:
                return False
            (ax, ay), (bx, by) = self.vertices
            if cross(ax, ay, bx, by, px, py) != 0:
                return False
            return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)
        for (ax, ay), (bx, by) in self.sides():
            c = cross(ax, ay, bx, by, px, py)
            if c < 0 or (strict and c == 0):
                return False
        return True


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolygon:
    """Strict counter-clockwise convex hull (Andrew's monotone chain).

    Collinear boundary points are dropped, so the vertex list holds corners
    only.  Degenerate inputs yield dimension 1 (segment) or 0 (point)."""
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if not pts:
        raise ValueError("convex hull of empty point set")
    if len(pts) == 1:
        return LatticePolygon((pts[0],), 0)

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(*out[-2], *out[-1], *p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    if len(verts) == 2:
        return LatticePolygon((min(verts), max(verts)), 1)
    # rotate to start at the lexicographic minimum (monotone chain already
    # does, but keep it explicit and canonical)
    k = verts.index(min(verts))
    verts = verts[k:] + verts[:k]
    return LatticePolygon(tuple(verts), 2)


def polygon_area(poly: LatticePolygon) -> Fraction:
    """Exact shoelace area; 0 for degenerate polygons."""
    if poly.dimension < 2:
        return Fraction(0)
    twice = 0
    verts = poly.vertices
    for i in range(len(verts)):
        (ax, ay), (bx, by) = verts[i], verts[(i + 1) % len(verts)]
        twice += ax * by - ay * bx
    return Fraction(twice, 2)


def _angle_key(v: IntVec2) -> int:
    # half-plane index for CCW angle order starting at direction (1, 0)
    return 0 if (v.dy > 0 or (v.dy == 0 and v.dx > 0)) else 1


def _angle_less(u: IntVec2, v: IntVec2) -> bool:
    hu, hv = _angle_key(u), _angle_key(v)
    if hu != hv:
        return hu < hv
    return det2(u, v) > 0


def minkowski_sum(r: LatticePolygon, s: LatticePolygon) -> LatticePolygon:
    """Minkowski sum by merging the boundary edge sequences in angle order.

    Handles degenerate operands: a point translates, a segment contributes
    its two opposite edge vectors."""

    def start_vertex(poly):
        return min(poly.vertices, key=lambda p: (p[1], p[0]))

    def edge_cycle(poly):
        if poly.dimension == 0:
            return []
        vecs = poly.edge_vectors()
        if poly.dimension == 1:
            a = start_vertex(poly)
            b = poly.vertices[1] if poly.vertices[0] == a else poly.vertices[0]
            d = IntVec2(b[0] - a[0], b[1] - a[1])
            return [d, -d]
        k = poly.vertices.index(start_vertex(poly))
        return vecs[k:] + vecs[:k]

    er, es = edge_cycle(r), edge_cycle(s)
    sr, ss = start_vertex(r), start_vertex(s)
    cur = (sr[0] + ss[0], sr[1] + ss[1])
    walk = [cur]
    i = j = 0
    while i < len(er) or j < len(es):
        if j == len(es):
            step = er[i]
            i += 1
        elif i == len(er):
            step = es[j]
            j += 1
        elif _angle_less(er[i], es[j]):
            step = er[i]
            i += 1
        elif _angle_less(es[j], er[i]):
            step = es[j]
            j += 1
        else:  # parallel edges merge into one step
            step = IntVec2(er[i].dx + es[j].dx, er[i].dy + es[j].dy)
            i += 1
            j += 1
        cur = (cur[0] + step.dx, cur[1] + step.dy)
        walk.append(cur)
    # the walk closes on itself; canonicalize (also resolves degenerate sums)
    return convex_hull(walk)


def lattice_points_in(poly: LatticePolygon) -> list[IntPoint]:
    """All integer points inside or on the polygon."""
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if poly.contains(x, y):
                out.append((x, y))
    return out
