"""Immutable undirected simple graphs with role-tagged vertices.

Vertices carry a structural key (any sortable, hashable value), a role string,
and a rational plane position used only for export.  The vertex order is the
sorted key order, so repeated builds of the same structure serialise to
identical bytes.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator

from .radicals import format_rational

__all__ = [
    "ROLE_CORNER",
    "ROLE_CENTROID",
    "PARTITION_KINDS",
    "UnknownVertex",
    "DisconnectedGraph",
    "VertexRecord",
    "EdgePartition",
    "Network",
]

ROLE_CORNER = "OxideCorner"
ROLE_CENTROID = "Centroid"

PARTITION_KINDS = ("degree", "degsum")


class UnknownVertex(KeyError):
    """Raised when a query names a vertex that is not in the graph."""


class DisconnectedGraph(ValueError):
    """Raised by distance computations on graphs that are not connected."""


@dataclass(frozen=True)
class VertexRecord:
    key: Any
    role: str
    pos: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class EdgePartition:
    """Edge counts per unordered endpoint-label class ``(a, b)`` with a <= b."""

    kind: str
    classes: tuple[tuple[tuple[int, int], int], ...]  # sorted by class

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.classes)

    def count(self, a: int, b: int) -> int:
        want = (a, b) if a <= b else (b, a)
        return dict(self.classes).get(want, 0)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.classes)


class Network:
    """Undirected simple graph, frozen after construction."""

    __slots__ = ("family", "dimension", "_records", "_index", "_adj", "_edges", "_dsum")

    def __init__(self, family, dimension, records, index, adj, edges):
        self.family = family
        self.dimension = dimension
        self._records = records
        self._index = index
        self._adj = adj
        self._edges = edges
        self._dsum = None

    @classmethod
    def build(
        cls,
        records: Iterable[VertexRecord],
        edges: Iterable[tuple[Any, Any]],
        family: str = "Custom",
        dimension: int | None = None,
    ) -> "Network":
        recs = tuple(sorted(records, key=lambda r: r.key))
        index: dict[Any, int] = {}
        for i, r in enumerate(recs):
            if r.key in index:
                raise ValueError(f"duplicate vertex key {r.key!r}")
            index[r.key] = i
        norm = set()
        for u, v in edges:
            if u not in index:
                raise UnknownVertex(repr(u))
            if v not in index:
                raise UnknownVertex(repr(v))
            i, j = index[u], index[v]
            if i == j:
                raise ValueError(f"self-loop at {u!r}")
            e = (i, j) if i < j else (j, i)
            if e in norm:
                raise ValueError(f"parallel edge {u!r} -- {v!r}")
            norm.add(e)
        adj_sets: list[set[int]] = [set() for _ in recs]
        for i, j in norm:
            adj_sets[i].add(j)
            adj_sets[j].add(i)
        adj = tuple(tuple(sorted(s)) for s in adj_sets)
        return cls(family, dimension, recs, index, adj, tuple(sorted(norm)))

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._records)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> tuple[VertexRecord, ...]:
        return self._records

    def _idx(self, key: Any) -> int:
        try:
            return self._index[key]
        except KeyError:
            raise UnknownVertex(repr(key)) from None

    def __contains__(self, key: Any) -> bool:
        return key in self._index

    def degree(self, key: Any) -> int:
        return len(self._adj[self._idx(key)])

    def degree_sum(self, key: Any) -> int:
        """Sum of the degrees of the vertex's neighbours."""
        i = self._idx(key)
        return sum(len(self._adj[j]) for j in self._adj[i])

    def neighbors(self, key: Any) -> tuple[Any, ...]:
        i = self._idx(key)
        return tuple(self._records[j].key for j in self._adj[i])

    def edge_keys(self) -> Iterator[tuple[Any, Any]]:
        for i, j in self._edges:
            yield self._records[i].key, self._records[j].key

    # -- partitions ----------------------------------------------------------

    def _labels(self, kind: str) -> list[int]:
        if kind not in PARTITION_KINDS:
            raise ValueError(f"unknown partition kind {kind!r}, expected one of {PARTITION_KINDS}")
        degs = [len(a) for a in self._adj]
        if kind == "degree":
            return degs
        if self._dsum is None:
            self._dsum = [sum(degs[j] for j in a) for a in self._adj]
        return self._dsum

    def edge_partition(self, kind: str) -> EdgePartition:
        labels = self._labels(kind)
        counts: Counter = Counter()
        for i, j in self._edges:
            a, b = labels[i], labels[j]
            counts[(a, b) if a <= b else (b, a)] += 1
        return EdgePartition(kind=kind, classes=tuple(sorted(counts.items())))

    # -- distances -----------------------------------------------------------

    def _bfs(self, source: int) -> list[int]:
        dist = [-1] * len(self._records)
        dist[source] = 0
        q = deque([source])
        while q:
            u = q.popleft()
            for w in self._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist

    def is_connected(self) -> bool:
        if not self._records:
            return True
        return min(self._bfs(0)) >= 0

    def distance_matrix(self) -> list[list[int]]:
        """All-pairs geodesic distances by breadth-first search per source."""
        out = []
        for s in range(len(self._records)):
            dist = self._bfs(s)
            if min(dist) < 0:
                raise DisconnectedGraph("distance matrix requires a connected graph")
            out.append(dist)
        return out

    # -- export ----------------------------------------------------------------

    def to_json_doc(self) -> dict:
        verts = [
            {
                "id": i,
                "key": str(r.key),
                "role": r.role,
                "x": _frac_str(r.pos[0]),
                "y": _frac_str(r.pos[1]),
            }
            for i, r in enumerate(self._records)
        ]
        return {
            "family": self.family,
            "n": self.dimension,
            "vertices": verts,
            "edges": [list(e) for e in self._edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_doc(), separators=(",", ":"))

    @classmethod
    def from_json_doc(cls, doc: dict) -> "Network":
        records = [
            VertexRecord(
                key=v["key"],
                role=v.get("role", ROLE_CORNER),
                pos=(Fraction(v.get("x", 0)), Fraction(v.get("y", 0))),
            )
            for v in doc["vertices"]
        ]
        by_id = {v["id"]: v["key"] for v in doc["vertices"]}
        edges = [(by_id[i], by_id[j]) for i, j in doc["edges"]]
        return cls.build(records, edges, family=doc.get("family", "Custom"), dimension=doc.get("n"))

    def to_dot(self) -> str:
        shapes = {ROLE_CORNER: "circle", ROLE_CENTROID: "box"}
        name = self.family if self.dimension is None else f"{self.family}_{self.dimension}"
        lines = [f"graph {name} {{"]
        for i, r in enumerate(self._records):
            shape = shapes.get(r.role, "ellipse")
            x = format_rational(r.pos[0], 4)
            y = format_rational(r.pos[1], 4)
            lines.append(f'  v{i} [shape={shape}, pos="{x},{y}!"];')
        for i, j in self._edges:
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_edgelist(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in self._edges)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
