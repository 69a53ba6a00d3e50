"""Honeycomb patch enumeration and the triangle-cell layouts built on it.

Hexagons live on cube coordinates ``(x, y, z)`` with ``x + y + z == 0``; the
patch of dimension ``n`` keeps the hexagons with ``max(|x|,|y|,|z|) <= n-1``
(a centered arrangement of ``3n^2 - 3n + 1`` cells).  Everything downstream is
keyed structurally off these coordinates:

* a honeycomb vertex is the unordered triple of mutually adjacent hexagons
  meeting at that corner (hexagons outside the patch still participate in the
  key, which makes boundary keys canonical);
* a honeycomb edge is the unordered pair of hexagons flanking that side.

Two cell layouts feed the network generators:

* :func:`silicate_cells` puts one corner-sharing triangle on every honeycomb
  vertex, its corners sitting on the incident honeycomb edges; boundary
  vertices with only two incident edges get a pendant corner on the missing
  side, so every cell has exactly three corners.
* :func:`dominating_cells` puts a closed ring of six triangles inside every
  hexagon, one per side; ring neighbours share an inner corner and the two
  cells on either side of a shared hexagon side meet at one outer corner.

Coordinates are exact rationals in the oblique lattice basis and exist only
for export; identity is always the structural key.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable

__all__ = [
    "InvalidDimension",
    "HEX_DIRS",
    "Honeycomb",
    "TriangleCell",
    "CornerRef",
    "honeycomb",
    "silicate_cells",
    "dominating_cells",
    "lattice_to_xy",
]


class InvalidDimension(ValueError):
    """Raised for dimensions below 1."""


# Neighbour offsets in counterclockwise order starting at angle 0.
HEX_DIRS = (
    (1, -1, 0),
    (0, -1, 1),
    (-1, 0, 1),
    (-1, 1, 0),
    (0, 1, -1),
    (1, 0, -1),
)

Hex = tuple[int, int, int]
Pos = tuple[Fraction, Fraction]  # oblique lattice coordinates (alpha, beta)


def _check_dimension(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidDimension(f"dimension must be a positive integer, got {n}")


def _add(h: Hex, d: Hex) -> Hex:
    return (h[0] + d[0], h[1] + d[1], h[2] + d[2])


def _in_range(h: Hex, n: int) -> bool:
    return max(abs(h[0]), abs(h[1]), abs(h[2])) <= n - 1


def hex_pos(h: Hex) -> Pos:
    """Lattice coordinates of a hexagon center (axial q = x, r = z)."""
    return (Fraction(h[0]), Fraction(h[2]))


def lattice_to_xy(p: Pos) -> tuple[Fraction, Fraction]:
    """Rational plane embedding of lattice coordinates.

    ``x = alpha + beta/2`` matches the true layout; ``y`` uses the rational
    slope 3/4 in place of sqrt(3)/2, a shear that keeps distinct lattice
    points distinct.
    """
    a, b = p
    return (a + b / 2, b * Fraction(3, 4))


def _avg(points: Iterable[Pos]) -> Pos:
    pts = list(points)
    return (
        sum(p[0] for p in pts) / len(pts),
        sum(p[1] for p in pts) / len(pts),
    )


def _cross_sign(u: Pos, v: Pos) -> int:
    # Cross product sign in the true geometry equals the lattice-coordinate
    # cross product sign (the basis change has positive determinant).
    c = u[0] * v[1] - v[0] * u[1]
    return (c > 0) - (c < 0)


def _half(d: Pos) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2*pi); true y sign is sign(beta),
    # true x sign is sign(2*alpha + beta).
    beta = d[1]
    x2 = 2 * d[0] + d[1]
    if beta > 0 or (beta == 0 and x2 > 0):
        return 0
    return 1


def order_ccw(center: Pos, items: list) -> list:
    """Order (key, pos) pairs counterclockwise around ``center`` from angle 0."""

    def cmp(a, b):
        da = (a[1][0] - center[0], a[1][1] - center[1])
        db = (b[1][0] - center[0], b[1][1] - center[1])
        ha, hb = _half(da), _half(db)
        if ha != hb:
            return -1 if ha < hb else 1
        return -_cross_sign(da, db)

    return sorted(items, key=cmp_to_key(cmp))


def corner_triple(h: Hex, i: int) -> tuple[Hex, Hex, Hex]:
    """The honeycomb vertex between directions i and i+1 of hexagon h."""
    a = _add(h, HEX_DIRS[i])
    b = _add(h, HEX_DIRS[(i + 1) % 6])
    return tuple(sorted((h, a, b)))


def side_pair(h: Hex, i: int) -> tuple[Hex, Hex]:
    """The honeycomb edge between hexagon h and its neighbour in direction i."""
    return tuple(sorted((h, _add(h, HEX_DIRS[i]))))


def vertex_pos(v: tuple[Hex, Hex, Hex]) -> Pos:
    return _avg(hex_pos(h) for h in v)


def edge_midpoint(e: tuple[Hex, Hex]) -> Pos:
    return _avg(hex_pos(h) for h in e)


@dataclass(frozen=True)
class Honeycomb:
    """Hexagons, vertices, edges, and their incidences for one patch."""

    n: int
    hexagons: tuple[Hex, ...]
    vertices: tuple[tuple[Hex, Hex, Hex], ...]
    edges: tuple[tuple[Hex, Hex], ...]

    @property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def edges_at(self, v: tuple[Hex, Hex, Hex]) -> tuple[tuple[Hex, Hex], ...]:
        """Incident edges of a vertex: the pairs of its triple present in the patch."""
        es = self._edge_set
        return tuple(p for p in combinations(v, 2) if tuple(sorted(p)) in es)

    def endpoints(self, e: tuple[Hex, Hex]) -> tuple[tuple[Hex, Hex, Hex], ...]:
        """The two vertices of an edge: triples over the pair's common neighbours."""
        a, b = e
        na = {_add(a, d) for d in HEX_DIRS}
        nb = {_add(b, d) for d in HEX_DIRS}
        return tuple(sorted(tuple(sorted((a, b, c))) for c in na & nb))


def honeycomb(n: int) -> Honeycomb:
    """Enumerate the honeycomb patch of dimension n."""
    _check_dimension(n)
    hexes = sorted(
        (x, y, -x - y)
        for x in range(-(n - 1), n)
        for y in range(-(n - 1), n)
        if abs(x + y) <= n - 1
    )
    vertices = set()
    edges = set()
    for h in hexes:
        for i in range(6):
            vertices.add(corner_triple(h, i))
            edges.add(side_pair(h, i))
    return Honeycomb(
        n=n,
        hexagons=tuple(hexes),
        vertices=tuple(sorted(vertices)),
        edges=tuple(sorted(edges)),
    )


@dataclass(frozen=True)
class CornerRef:
    key: tuple
    pos: Pos

    @property
    def kind(self) -> str:
        return self.key[0]


@dataclass(frozen=True)
class TriangleCell:
    """Three corners in counterclockwise order plus the cell center."""

    id: tuple
    corners: tuple[CornerRef, CornerRef, CornerRef]
    center: Pos


def silicate_cells(n: int) -> list[TriangleCell]:
    """One triangle per honeycomb vertex, corners on the incident edges.

    A corner on a patch edge is ``("shared", edge)`` and belongs to the cells
    at both of the edge's endpoints; a boundary vertex's missing third edge
    yields ``("pendant", vertex, pair)`` at the absent side's midpoint.
    """
    hc = honeycomb(n)
    cells = []
    for v in hc.vertices:
        corners = []
        for pair in combinations(v, 2):
            pair = tuple(sorted(pair))
            pos = edge_midpoint(pair)
            if _in_range(pair[0], n) or _in_range(pair[1], n):
                key = ("shared", pair)
            else:
                key = ("pendant", v, pair)
            corners.append((key, pos))
        center = _avg(pos for _, pos in corners)
        ordered = order_ccw(center, corners)
        cells.append(
            TriangleCell(
                id=v,
                corners=tuple(CornerRef(key, pos) for key, pos in ordered),
                center=center,
            )
        )
    return cells


def dominating_cells(n: int) -> list[TriangleCell]:
    """Six triangles per hexagon, one per side, forming a closed ring.

    The cell on side ``i`` has two inner corners pulled 7/10 of the way from
    the hexagon center toward the side's endpoints (shared with the ring
    neighbours) and one outer corner at the side midpoint (shared with the
    adjacent hexagon's cell on the same side, when that hexagon is in the
    patch).
    """
    _check_dimension(n)
    hexes = sorted(
        (x, y, -x - y)
        for x in range(-(n - 1), n)
        for y in range(-(n - 1), n)
        if abs(x + y) <= n - 1
    )
    pull = Fraction(7, 10)
    cells = []
    for h in hexes:
        hp = hex_pos(h)
        for i in range(6):
            tri_a = corner_triple(h, (i - 1) % 6)
            tri_b = corner_triple(h, i)
            corners = []
            for tri in (tri_a, tri_b):
                vp = vertex_pos(tri)
                pos = (
                    hp[0] + pull * (vp[0] - hp[0]),
                    hp[1] + pull * (vp[1] - hp[1]),
                )
                corners.append((("inner", h, tri), pos))
            side = side_pair(h, i)
            corners.append((("outer", side), edge_midpoint(side)))
            center = _avg(pos for _, pos in corners)
            ordered = order_ccw(center, corners)
            cells.append(
                TriangleCell(
                    id=(h, i),
                    corners=tuple(CornerRef(key, pos) for key, pos in ordered),
                    center=center,
                )
            )
    return cells
