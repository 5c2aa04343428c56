"""Tropical plane curves as weighted planar graphs dual to the subdivision.

A curve has one vertex per 2-cell (the point where the cell's terms tie),
one bounded edge per interior subdivision edge, and one unbounded ray per
boundary subdivision edge.  Curves from 1-dimensional subdivisions (binomial
supports and the like) have no vertices at all and are carried as a set of
full lines, each a two-ended unbounded edge.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .geometry import (
    IntPoint,
    IntVec2,
    Point2,
    det2,
    primitive,
    rational_direction,
    segment_lattice_length,
)
from .polynomial import TropicalPolynomial, argmax_terms, dehomogenize, evaluate
from .subdivision import (
    DualSubdivision,
    SubdivisionEdge,
    dual_subdivision,
    interior_lattice_vertex_count,
    is_unimodular_triangulation,
)


class EmptyVarietyError(ValueError):
    """Raised for monomials, whose variety is empty."""


@dataclass(frozen=True)
class CurveVertex:
    point: Point2
    cell: tuple[IntPoint, ...]  # CCW corners of the dual 2-cell


@dataclass(frozen=True)
class BoundedEdge:
    tail: int
    head: int
    weight: int
    dual: tuple[IntPoint, IntPoint]


@dataclass(frozen=True)
class Ray:
    vertex: int
    direction: IntVec2  # primitive, pointing away from the vertex
    weight: int
    dual: tuple[IntPoint, IntPoint]


@dataclass(frozen=True)
class FullLine:
    """A two-ended unbounded edge: base + t * direction for all rational t."""

    base: Point2
    direction: IntVec2
    weight: int
    dual: tuple[IntPoint, IntPoint]


@dataclass(frozen=True)
class TropicalCurve:
    polynomial: TropicalPolynomial  # affine source
    subdivision: DualSubdivision
    vertices: tuple[CurveVertex, ...]
    edges: tuple[BoundedEdge, ...]
    rays: tuple[Ray, ...]
    lines: tuple[FullLine, ...]

    def incident(self, vid: int) -> list[tuple[IntVec2, int]]:
        """(primitive outgoing direction, weight) of every edge and ray at a
        vertex, reading the stored graph data only."""
        out = []
        here = self.vertices[vid].point
        for e in self.edges:
            if e.tail == vid or e.head == vid:
                other = self.vertices[e.head if e.tail == vid else e.tail].point
                d, _ = rational_direction(other.x - here.x, other.y - here.y)
                out.append((d, e.weight))
        for r in self.rays:
            if r.vertex == vid:
                out.append((r.direction, r.weight))
        return out


def _solve_tie(f: TropicalPolynomial, cell: tuple[IntPoint, ...]) -> Point2:
    """The point where all terms of a 2-cell tie: solved from two
    independent tie equations, remaining ties asserted."""
    a0 = cell[0]
    c0 = f.coefficient(a0)
    rows = []
    for a in cell[1:]:
        rows.append((a0[0] - a[0], a0[1] - a[1], f.coefficient(a) - c0))
    (u1, u2, r1), (v1, v2, r2) = rows[0], rows[1]
    det = u1 * v2 - u2 * v1
    assert det != 0, "cell corners are collinear"
    x = Fraction(r1 * v2 - r2 * u2, det)
    y = Fraction(u1 * r2 - v1 * r1, det)
    p = Point2(x, y)
    value = c0 + a0[0] * x + a0[1] * y
    assert value == evaluate(f, p), "cell terms do not attain the maximum"
    for a in cell[2:]:
        assert f.coefficient(a) + a[0] * x + a[1] * y == value, "inconsistent tie system"
    return p


def _line_through(f: TropicalPolynomial, e: SubdivisionEdge) -> Point2:
    """Some point on the tie locus of the two endpoint terms of e."""
    (a1, a2) = e.endpoints
    n1, n2 = a1[0] - a2[0], a1[1] - a2[1]
    rhs = f.coefficient(a2) - f.coefficient(a1)
    if n1 != 0:
        return Point2(Fraction(rhs, n1), Fraction(0))
    return Point2(Fraction(0), Fraction(rhs, n2))


def build_curve(f: TropicalPolynomial) -> TropicalCurve:
    """Construct V(f) from the dual subdivision."""
    if f.is_homogeneous:
        f = dehomogenize(f)
    if len(f.terms) == 1:
        raise EmptyVarietyError("empty variety")
    subdiv = dual_subdivision(f)

    if subdiv.dimension == 1:
        lines = []
        for e in subdiv.edges:
            dual_vec = IntVec2(e.b[0] - e.a[0], e.b[1] - e.a[1])
            direction, weight = primitive(dual_vec)
            direction = direction.perp()
            if direction.dx < 0 or (direction.dx == 0 and direction.dy < 0):
                direction = -direction
            base = _line_through(f, e)
            assert len(argmax_terms(f, base)) >= 2
            lines.append(FullLine(base, direction, weight, e.endpoints))
        lines.sort(key=lambda l: (l.dual))
        return TropicalCurve(f, subdiv, (), (), (), tuple(lines))

    cell_vertex: dict[tuple[IntPoint, ...], int] = {}
    vertices = []
    for cell in subdiv.cells:
        cell_vertex[cell] = len(vertices)
        vertices.append(CurveVertex(_solve_tie(f, cell), cell))

    edges = []
    rays = []
    for e in subdiv.edges:
        owners = subdiv.cell_of_edge(e)
        dual_vec = IntVec2(e.b[0] - e.a[0], e.b[1] - e.a[1])
        _, weight = primitive(dual_vec)
        if e.interior:
            i, j = (cell_vertex[subdiv.cells[k]] for k in owners)
            vi, vj = vertices[i].point, vertices[j].point
            assert vi != vj
            # duality: the edge is perpendicular to its dual edge
            assert (vj.x - vi.x) * dual_vec.dx + (vj.y - vi.y) * dual_vec.dy == 0
            edges.append(BoundedEdge(min(i, j), max(i, j), weight, e.endpoints))
        else:
            (i,) = (cell_vertex[subdiv.cells[k]] for k in owners)
            v = vertices[i].point
            direction = primitive(dual_vec.perp())[0]
            if not _ray_sign_ok(f, v, direction, e):
                direction = -direction
                assert _ray_sign_ok(f, v, direction, e), "no valid ray orientation"
            rays.append(Ray(i, direction, weight, e.endpoints))

    edges.sort(key=lambda e: e.dual)
    rays.sort(key=lambda r: r.dual)
    return TropicalCurve(f, subdiv, tuple(vertices), tuple(edges), tuple(rays), ())


def _ray_sign_ok(f: TropicalPolynomial, v: Point2, d: IntVec2, e: SubdivisionEdge) -> bool:
    """One unit step along d must keep both dual-edge terms maximal."""
    probe = v + d
    winners = argmax_terms(f, probe)
    return e.a in winners and e.b in winners


def check_balancing(curve: TropicalCurve) -> bool:
    """Weighted primitive directions sum to zero at every vertex."""
    for vid in range(len(curve.vertices)):
        sx = sy = 0
        for d, w in curve.incident(vid):
            sx += w * d.dx
            sy += w * d.dy
        if sx != 0 or sy != 0:
            return False
    return True


@dataclass(frozen=True)
class VertexReport:
    valence: int
    multiplicity: int | None  # defined only for 3-valent vertices


def vertex_multiplicity(curve: TropicalCurve, vid: int) -> int:
    """m_i * m_j * |det| over two of the three incident directions; all
    three pairings agree and that is asserted."""
    inc = curve.incident(vid)
    if len(inc) != 3:
        raise ValueError("not 3-valent")
    (d1, m1), (d2, m2), (d3, m3) = inc
    mults = {
        m1 * m2 * abs(det2(d1, d2)),
        m2 * m3 * abs(det2(d2, d3)),
        m1 * m3 * abs(det2(d1, d3)),
    }
    assert len(mults) == 1, "pairings disagree; balancing is broken"
    return mults.pop()


def vertex_report(curve: TropicalCurve, vid: int) -> VertexReport:
    inc = curve.incident(vid)
    if len(inc) != 3:
        return VertexReport(len(inc), None)
    return VertexReport(3, vertex_multiplicity(curve, vid))


def is_smooth(curve: TropicalCurve) -> bool:
    """Every vertex 3-valent with multiplicity 1.  Vertex-free curves are
    not smooth; this keeps the answer equal to the dual unimodular-
    triangulation test, which is asserted."""
    answer = bool(curve.vertices)
    for vid in range(len(curve.vertices)):
        inc = curve.incident(vid)
        if len(inc) != 3 or vertex_multiplicity(curve, vid) != 1:
            answer = False
            break
    assert answer == is_unimodular_triangulation(curve.subdivision)
    return answer


def _cycle_rank(curve: TropicalCurve) -> int:
    """First Betti number of the bounded-edge graph."""
    parent = list(range(len(curve.vertices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    components = len(curve.vertices)
    extra = 0
    for e in curve.edges:
        a, b = find(e.tail), find(e.head)
        if a == b:
            extra += 1
        else:
            parent[a] = b
            components -= 1
    return extra


def genus(curve: TropicalCurve) -> int:
    """Interior subdivision vertices; equals the independent cycle count of
    the bounded graph for smooth curves (asserted)."""
    if not is_smooth(curve):
        raise ValueError("genus defined for smooth curves only")
    g = interior_lattice_vertex_count(curve.subdivision)
    assert g == _cycle_rank(curve)
    return g


def curve_contains(curve: TropicalCurve, p: Point2) -> bool:
    """Membership: at least two terms attain the maximum at p."""
    return len(argmax_terms(curve.polynomial, p)) >= 2


# ---------------------------------------------------------------------------
# linear pieces, shared with the intersection machinery

@dataclass(frozen=True)
class Piece:
    """A maximal straight piece of a curve: base + t * direction for
    t in [0, length], [0, oo) when length is None, or all of Q for a line."""

    base: Point2
    direction: IntVec2
    length: Fraction | None
    weight: int
    unbounded_below: bool = False

    def param_in_range(self, t: Fraction) -> bool:
        if not self.unbounded_below and t < 0:
            return False
        return self.length is None or t <= self.length

    def at(self, t: Fraction) -> Point2:
        return Point2(self.base.x + t * self.direction.dx,
                      self.base.y + t * self.direction.dy)


def pieces(curve: TropicalCurve) -> list[Piece]:
    out = []
    for e in curve.edges:
        a = curve.vertices[e.tail].point
        b = curve.vertices[e.head].point
        d, length = rational_direction(b.x - a.x, b.y - a.y)
        out.append(Piece(a, d, length, e.weight))
    for r in curve.rays:
        out.append(Piece(curve.vertices[r.vertex].point, r.direction, None, r.weight))
    for l in curve.lines:
        out.append(Piece(l.base, l.direction, None, l.weight, unbounded_below=True))
    return out


def tampered(curve: TropicalCurve, bump: int = 1) -> TropicalCurve:
    """Negative control: same graph with the first weight bumped."""
    if curve.edges:
        bad = replace(curve.edges[0], weight=curve.edges[0].weight + bump)
        return replace(curve, edges=(bad,) + curve.edges[1:])
    if curve.rays:
        bad = replace(curve.rays[0], weight=curve.rays[0].weight + bump)
        return replace(curve, rays=(bad,) + curve.rays[1:])
    raise ValueError("nothing to tamper with")
