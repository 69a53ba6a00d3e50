"""Build the three network families from scaffold triangle cells.

Every cell contributes its three corners plus three centroid vertices, one per
face of the fan drawing (face ``i`` spans corners ``i`` and ``i+1``).  The
octahedron ornamentation joins each centroid to both corners of its face and
to the other centroids of the same cell; the prism ornamentation joins each
centroid to exactly one corner instead, so every cell is a 3-prism.
"""

from __future__ import annotations

from .graphs import Network, ROLE_CENTROID, ROLE_CORNER, VertexRecord
from .scaffold import InvalidDimension, TriangleCell, dominating_cells, silicate_cells

__all__ = ["InvalidDimension", "generate_poh", "generate_tp", "generate_dpoh", "TP_MATCHINGS"]

# Which corner each face centroid picks up its prism edge with: the face's
# lower-indexed corner ("ccw") or the higher-indexed one ("cw").  The source
# drawing procedure never pins this down; the degree partition is identical
# either way and the verifier records the orientation it ran with.
TP_MATCHINGS = ("ccw", "cw")


def _assemble(cells: list[TriangleCell], style: str, family: str, n: int) -> Network:
    records: dict = {}
    edges: list = []

    def vertex(key, role, pos):
        if key not in records:
            records[key] = VertexRecord(key=key, role=role, pos=pos)

    for cell in cells:
        ck = [c.key for c in cell.corners]
        for c in cell.corners:
            vertex(c.key, ROLE_CORNER, c.pos)
        cents = []
        for i in range(3):
            a = cell.corners[i]
            b = cell.corners[(i + 1) % 3]
            key = ("centroid", cell.id, i)
            pos = (
                (cell.center[0] + a.pos[0] + b.pos[0]) / 3,
                (cell.center[1] + a.pos[1] + b.pos[1]) / 3,
            )
            vertex(key, ROLE_CENTROID, pos)
            cents.append(key)
        edges += [(ck[0], ck[1]), (ck[1], ck[2]), (ck[2], ck[0])]
        edges += [(cents[0], cents[1]), (cents[1], cents[2]), (cents[2], cents[0])]
        for i in range(3):
            if style == "octa":
                edges.append((cents[i], ck[i]))
                edges.append((cents[i], ck[(i + 1) % 3]))
            elif style == "prism-ccw":
                edges.append((cents[i], ck[i]))
            else:  # prism-cw
                edges.append((cents[i], ck[(i + 1) % 3]))

    return Network.build(records.values(), edges, family=family, dimension=n)


def generate_poh(n: int) -> Network:
    """Planar octahedron network: octahedron cells on the silicate layout."""
    return _assemble(silicate_cells(n), "octa", "POH", n)


def generate_tp(n: int, matching: str = "ccw") -> Network:
    """Triangular prism network: prism cells on the silicate layout."""
    if matching not in TP_MATCHINGS:
        raise ValueError(f"matching must be one of {TP_MATCHINGS}, got {matching!r}")
    return _assemble(silicate_cells(n), f"prism-{matching}", "TP", n)


def generate_dpoh(n: int) -> Network:
    """Dominating planar octahedron network: octahedron cells on the ring layout."""
    return _assemble(dominating_cells(n), "octa", "DPOH", n)
