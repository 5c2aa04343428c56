"""Regular subdivision of the Newton polygon from the lifted upper hull.

Support points (a, b) are lifted to (a, b, coefficient); the faces of the
lifted convex hull whose outward normal points up project to the cells of
the subdivision.  All predicates are integer determinant signs (coefficients
are cleared to integers by a common denominator first, which rescales the
lift vertically and leaves the upper faces unchanged).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import IntPoint, LatticePolygon, convex_hull, cross, polygon_area
from .polynomial import TropicalPolynomial, dehomogenize

Lifted = tuple[int, int, int]


@dataclass(frozen=True)
class SubdivisionEdge:
    """An edge of the subdivision; endpoints sorted, interior means shared
    by two cells (boundary edges lie on the Newton polygon boundary)."""

    a: IntPoint
    b: IntPoint
    interior: bool

    @property
    def endpoints(self) -> tuple[IntPoint, IntPoint]:
        return (self.a, self.b)


@dataclass(frozen=True)
class DualSubdivision:
    """cells: CCW corner tuples of each 2-cell; vertices: all cell corners
    (for degenerate supports, the chain/point vertices).  dimension 2 means a
    proper polygonal subdivision, 1 a chain of segments, 0 a single point."""

    cells: tuple[tuple[IntPoint, ...], ...]
    edges: tuple[SubdivisionEdge, ...]
    vertices: tuple[IntPoint, ...]
    polygon: LatticePolygon
    dimension: int

    def boundary_edges(self) -> list[SubdivisionEdge]:
        return [e for e in self.edges if not e.interior]

    def interior_edges(self) -> list[SubdivisionEdge]:
        return [e for e in self.edges if e.interior]

    def cell_of_edge(self, edge: SubdivisionEdge) -> list[int]:
        """Indices of the cells having this edge as a side."""
        out = []
        want = frozenset(edge.endpoints)
        for i, cell in enumerate(self.cells):
            n = len(cell)
            for k in range(n):
                if frozenset((cell[k], cell[(k + 1) % n])) == want:
                    out.append(i)
                    break
        return out


def _orient3d(p: Lifted, q: Lifted, r: Lifted, s: Lifted) -> int:
    """Sign of det[q - p; r - p; s - p]; positive when s is above the plane
    through p, q, r oriented CCW as seen from above."""
    ax, ay, az = q[0] - p[0], q[1] - p[1], q[2] - p[2]
    bx, by, bz = r[0] - p[0], r[1] - p[1], r[2] - p[2]
    cx, cy, cz = s[0] - p[0], s[1] - p[1], s[2] - p[2]
    det = (ax * (by * cz - bz * cy)
           - ay * (bx * cz - bz * cx)
           + az * (bx * cy - by * cx))
    return (det > 0) - (det < 0)


def _lift(f: TropicalPolynomial) -> dict[IntPoint, int]:
    scale = 1
    for _, c in f.terms:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return {(a, b): int(c * scale) for (a, b), c in f.terms}


def _chain_upper(entries: list[tuple[int, int, IntPoint]]) -> list[IntPoint]:
    """entries: (parameter, height, point) with distinct parameters.
    Returns points of the concave-from-above chain, parameter-ascending."""
    entries = sorted(entries)
    chain: list[tuple[int, int, IntPoint]] = []
    for t, h, pt in entries:
        while len(chain) >= 2:
            t1, h1, _ = chain[-2]
            t2, h2, _ = chain[-1]
            # keep strictly concave: middle point must be strictly above
            # the segment between its neighbors
            if (h2 - h1) * (t - t1) <= (h - h1) * (t2 - t1):
                chain.pop()
            else:
                break
        chain.append((t, h, pt))
    return [pt for _, _, pt in chain]


def dual_subdivision(f: TropicalPolynomial) -> DualSubdivision:
    """Subdivision of the Newton polygon induced by the coefficient lift."""
    if f.is_homogeneous:
        f = dehomogenize(f)
    heights = _lift(f)
    pts = sorted(heights)
    polygon = convex_hull(pts)

    if polygon.dimension == 0:
        return DualSubdivision((), (), (pts[0],), polygon, 0)

    if polygon.dimension == 1:
        a, b = polygon.vertices
        direction = (b[0] - a[0], b[1] - a[1])
        g = math.gcd(abs(direction[0]), abs(direction[1]))
        step = (direction[0] // g, direction[1] // g)
        axis = 0 if step[0] != 0 else 1
        entries = [((p[axis] - a[axis]) // step[axis], heights[p], p) for p in pts]
        chain = _chain_upper(entries)
        edges = tuple(
            SubdivisionEdge(min(u, v), max(u, v), False)
            for u, v in zip(chain, chain[1:])
        )
        return DualSubdivision((), edges, tuple(chain), polygon, 1)

    lifted = {p: (p[0], p[1], heights[p]) for p in pts}

    def face_through(a: IntPoint, b: IntPoint) -> frozenset[IntPoint]:
        """The upper face adjacent to directed edge a -> b on its left."""
        best = None
        for c in pts:
            if cross(*a, *b, *c) <= 0:
                continue
            if best is None or _orient3d(lifted[a], lifted[b], lifted[best], lifted[c]) > 0:
                best = c
        assert best is not None
        face = [p for p in pts
                if _orient3d(lifted[a], lifted[b], lifted[best], lifted[p]) == 0]
        assert not any(
            _orient3d(lifted[a], lifted[b], lifted[best], lifted[p]) > 0 for p in pts)
        return frozenset(face)

    # seed: a boundary edge of the subdivision on the first side of the polygon
    sa, sb = polygon.sides()[0]
    on_side = [p for p in pts if cross(*sa, *sb, *p) == 0]
    step = (sb[0] - sa[0], sb[1] - sa[1])
    g = math.gcd(abs(step[0]), abs(step[1]))
    step = (step[0] // g, step[1] // g)
    axis = 0 if step[0] != 0 else 1
    side_chain = _chain_upper(
        [((p[axis] - sa[axis]) // step[axis], heights[p], p) for p in on_side])
    seed_a, seed_b = side_chain[0], side_chain[1]

    faces: list[frozenset[IntPoint]] = []
    seen: set[frozenset[IntPoint]] = set()
    corner_lists: list[tuple[IntPoint, ...]] = []
    queue = [(seed_a, seed_b)]
    visited_edges: set[tuple[IntPoint, IntPoint]] = set()
    while queue:
        a, b = queue.pop()
        if (a, b) in visited_edges:
            continue
        visited_edges.add((a, b))
        if not any(cross(*a, *b, *p) > 0 for p in pts):
            continue  # edge on the polygon boundary seen from outside
        face = face_through(a, b)
        if face in seen:
            continue
        seen.add(face)
        corners = convex_hull(face)
        assert corners.dimension == 2
        faces.append(face)
        corner_lists.append(corners.vertices)
        n = len(corners.vertices)
        for i in range(n):
            u, v = corners.vertices[i], corners.vertices[(i + 1) % n]
            queue.append((v, u))  # the neighbor across u -> v sees it reversed

    # canonical order for determinism
    order = sorted(range(len(corner_lists)), key=lambda i: corner_lists[i])
    cells = tuple(corner_lists[i] for i in order)

    edge_count: dict[tuple[IntPoint, IntPoint], int] = {}
    for cell in cells:
        n = len(cell)
        for i in range(n):
            u, v = cell[i], cell[(i + 1) % n]
            key = (min(u, v), max(u, v))
            edge_count[key] = edge_count.get(key, 0) + 1
    assert all(c in (1, 2) for c in edge_count.values())
    edges = tuple(
        SubdivisionEdge(a, b, edge_count[(a, b)] == 2)
        for a, b in sorted(edge_count)
    )
    vertices = tuple(sorted({p for cell in cells for p in cell}))

    total = sum(polygon_area(convex_hull(cell)) for cell in cells)
    assert total == polygon_area(polygon), "cells do not tile the Newton polygon"
    return DualSubdivision(cells, edges, vertices, polygon, 2)


def is_unimodular_triangulation(s: DualSubdivision) -> bool:
    """True when every cell is a triangle of area 1/2 (degenerate
    subdivisions are never unimodular triangulations)."""
    if s.dimension != 2:
        return False
    for cell in s.cells:
        if len(cell) != 3:
            return False
        if polygon_area(convex_hull(cell)) != Fraction(1, 2):
            return False
    return True


def interior_lattice_vertex_count(s: DualSubdivision) -> int:
    """Subdivision vertices strictly inside the Newton polygon."""
    return sum(1 for v in s.vertices if s.polygon.contains(*v, strict=True))
