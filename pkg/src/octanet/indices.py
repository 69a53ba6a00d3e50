"""Degree-based topological indices with exact radical values.

Every built-in index is a sum over edges of a symmetric class function of the
endpoint labels: plain degrees for the product/sum connectivity family, or
neighbour-degree sums for the fourth/fifth connectivity variants.  Values are
computed over the edge partition (class value times class count), which keeps
the term count tiny and the result independent of edge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .graphs import DisconnectedGraph, Network
from .radicals import RadicalValue, sqrt_of_rational

__all__ = [
    "UnknownIndex",
    "IndexSpec",
    "INDEX_NAMES",
    "builtin",
    "compute",
    "compute_naive",
    "wiener",
]


class UnknownIndex(ValueError):
    """Raised for index names not in the registry."""


@dataclass(frozen=True)
class IndexSpec:
    """A per-edge-class value function plus the label basis it reads."""

    name: str
    basis: str  # "degree" or "degsum"
    per_edge: Callable[[int, int], RadicalValue]
    min_n: Optional[int] = None


def _product_power(alpha_num: int, alpha_den: int):
    # (a*b) ** (alpha_num / alpha_den) for the four supported exponents
    def half(a, b):
        return sqrt_of_rational(Fraction(a * b))

    def whole(a, b):
        return RadicalValue(a * b)

    def minus_whole(a, b):
        return RadicalValue(Fraction(1, a * b))

    def minus_half(a, b):
        return sqrt_of_rational(Fraction(1, a * b))

    return {
        (1, 1): whole,
        (1, 2): half,
        (-1, 1): minus_whole,
        (-1, 2): minus_half,
    }[(alpha_num, alpha_den)]


def _first_zagreb(a, b):
    return RadicalValue(a + b)


def _abc(a, b):
    return sqrt_of_rational(Fraction(a + b - 2, a * b))


def _ga(a, b):
    return sqrt_of_rational(Fraction(a * b)) * Fraction(2, a + b)


_BUILTINS: dict[str, tuple[str, Callable[[int, int], RadicalValue]]] = {
    "randic1": ("degree", _product_power(1, 1)),
    "randic1/2": ("degree", _product_power(1, 2)),
    "randic-1": ("degree", _product_power(-1, 1)),
    "randic-1/2": ("degree", _product_power(-1, 2)),
    "zagreb1": ("degree", _first_zagreb),
    "zagreb2": ("degree", _product_power(1, 1)),  # same class function as randic1
    "abc": ("degree", _abc),
    "ga": ("degree", _ga),
    "abc4": ("degsum", _abc),
    "ga5": ("degsum", _ga),
}

INDEX_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> IndexSpec:
    """Look up a built-in index by name."""
    try:
        basis, fn = _BUILTINS[name]
    except KeyError:
        raise UnknownIndex(
            f"unknown index {name!r}; expected one of {', '.join(INDEX_NAMES)}"
        ) from None
    return IndexSpec(name=name, basis=basis, per_edge=fn)


def compute(g: Network, spec: IndexSpec) -> RadicalValue:
    """Exact index value via the edge partition."""
    total = RadicalValue(0)
    for (a, b), count in g.edge_partition(spec.basis).classes:
        total = total + spec.per_edge(a, b) * count
    return total


def compute_naive(g: Network, spec: IndexSpec) -> RadicalValue:
    """Edge-by-edge reference computation, no partition involved."""
    if spec.basis == "degree":
        label = g.degree
    else:
        label = g.degree_sum
    total = RadicalValue(0)
    for u, v in g.edge_keys():
        total = total + spec.per_edge(label(u), label(v))
    return total


def wiener(g: Network) -> int:
    """Sum of geodesic distances over unordered vertex pairs."""
    total = 0
    n = g.vertex_count
    for s in range(n):
        dist = g._bfs(s)
        if min(dist) < 0:
            raise DisconnectedGraph("Wiener index requires a connected graph")
        total += sum(dist)
    return total // 2
