"""Small hand-built networks shared across test modules."""

from fractions import Fraction

from octanet.graphs import Network, ROLE_CORNER, VertexRecord


def custom(edges, n_vertices=None):
    keys = sorted({v for e in edges for v in e})
    if n_vertices is not None:
        keys = sorted(set(keys) | set(range(n_vertices)))
    records = [
        VertexRecord(key=k, role=ROLE_CORNER, pos=(Fraction(i), Fraction(0)))
        for i, k in enumerate(keys)
    ]
    return Network.build(records, edges)


def k3():
    return custom([(0, 1), (1, 2), (0, 2)])


def p3():
    return custom([(0, 1), (1, 2)])


def c6():
    return custom([(i, (i + 1) % 6) for i in range(6)])
