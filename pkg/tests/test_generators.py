from collections import Counter

import networkx as nx
import pytest

from octanet.generators import generate_dpoh, generate_poh, generate_tp
from octanet.scaffold import InvalidDimension


def table1(n):
    return {(4, 4): 18 * n * n + 12 * n, (4, 8): 36 * n * n, (8, 8): 18 * n * n - 12 * n}


def table3(n):
    return {(3, 3): 18 * n * n + 6 * n, (3, 6): 18 * n * n + 6 * n, (6, 6): 18 * n * n - 12 * n}


def table5(n):
    return {
        (4, 4): 54 * n * n - 30 * n + 6,
        (4, 8): 108 * n * n - 108 * n + 36,
        (8, 8): 54 * n * n - 78 * n + 30,
    }


def drop_zero(d):
    return {k: v for k, v in d.items() if v}


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(r.key for r in g.vertices)
    G.add_edges_from(g.edge_keys())
    return G


# Degree-sum censuses frozen from an independent float-geometry construction
# (position-dedup + networkx) before this package's generators existed.
POH_DEGSUM = {
    1: {(20, 20): 6, (20, 24): 24, (20, 40): 12, (24, 40): 24, (40, 40): 6},
    2: {(20, 20): 12, (20, 24): 48, (20, 40): 12, (20, 44): 12, (24, 24): 36,
        (24, 40): 24, (24, 44): 48, (24, 48): 48, (40, 44): 12, (44, 44): 6,
        (44, 48): 12, (48, 48): 18},
    3: {(20, 20): 18, (20, 24): 72, (20, 40): 12, (20, 44): 24, (24, 24): 108,
        (24, 40): 24, (24, 44): 96, (24, 48): 168, (40, 44): 12, (44, 44): 18,
        (44, 48): 24, (48, 48): 72},
}
TP_DEGSUM = {
    1: {(9, 12): 12, (9, 15): 6, (12, 12): 6, (12, 24): 12, (15, 24): 12,
        (24, 24): 6},
    2: {(9, 12): 24, (9, 15): 12, (12, 12): 48, (12, 24): 12, (12, 27): 24,
        (12, 30): 24, (15, 24): 12, (15, 27): 12, (24, 27): 12, (27, 27): 6,
        (27, 30): 12, (30, 30): 18},
    3: {(9, 12): 36, (9, 15): 18, (12, 12): 126, (12, 24): 12, (12, 27): 48,
        (12, 30): 84, (15, 24): 12, (15, 27): 24, (24, 27): 12, (27, 27): 18,
        (27, 30): 24, (30, 30): 72},
}
DPOH_DEGSUM = {
    1: {(20, 20): 6, (20, 24): 24, (20, 40): 12, (24, 40): 24, (40, 40): 6},
    2: {(20, 20): 18, (20, 24): 72, (20, 40): 24, (20, 44): 12, (24, 24): 72,
        (24, 40): 48, (24, 44): 48, (24, 48): 120, (40, 40): 6, (40, 44): 12,
        (44, 48): 24, (48, 48): 48},
    3: {(20, 20): 30, (20, 24): 120, (20, 40): 36, (20, 44): 24, (24, 24): 252,
        (24, 40): 72, (24, 44): 96, (24, 48): 456, (40, 40): 6, (40, 44): 24,
        (44, 48): 48, (48, 48): 204},
}


class TestPoh:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_and_partition(self, n):
        g = generate_poh(n)
        assert g.vertex_count == 27 * n * n + 3 * n
        assert g.edge_count == 72 * n * n
        assert g.edge_partition("degree").as_dict() == drop_zero(table1(n))

    def test_n1_shape(self):
        g = generate_poh(1)
        assert (g.vertex_count, g.edge_count) == (30, 72)

    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_degree_sum_census(self, n):
        assert generate_poh(n).edge_partition("degsum").as_dict() == POH_DEGSUM[n]


class TestTp:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_and_partition(self, n):
        g = generate_tp(n)
        assert g.vertex_count == 27 * n * n + 3 * n
        assert g.edge_count == 54 * n * n
        assert g.edge_partition("degree").as_dict() == drop_zero(table3(n))

    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_degree_sum_census(self, n):
        assert generate_tp(n).edge_partition("degsum").as_dict() == TP_DEGSUM[n]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_matching_orientation_invariance(self, n):
        fwd = generate_tp(n, matching="ccw")
        rev = generate_tp(n, matching="cw")
        assert fwd.edge_partition("degree") == rev.edge_partition("degree")
        # orientation turns out not to matter for the degree-sum classes either
        assert fwd.edge_partition("degsum") == rev.edge_partition("degsum")

    def test_rejects_unknown_matching(self):
        with pytest.raises(ValueError, match="matching"):
            generate_tp(1, matching="zigzag")


class TestDpoh:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_and_partition(self, n):
        g = generate_dpoh(n)
        assert g.vertex_count == 81 * n * n - 75 * n + 24
        assert g.edge_count == 216 * n * n - 216 * n + 72
        assert g.edge_partition("degree").as_dict() == drop_zero(table5(n))

    def test_n2_counts(self):
        g = generate_dpoh(2)
        assert (g.vertex_count, g.edge_count) == (198, 504)
        assert g.edge_partition("degree").as_dict() == {
            (4, 4): 162, (4, 8): 252, (8, 8): 90,
        }

    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_degree_sum_census(self, n):
        assert generate_dpoh(n).edge_partition("degsum").as_dict() == DPOH_DEGSUM[n]

    def test_n1_isomorphic_to_poh1(self):
        assert nx.is_isomorphic(to_nx(generate_dpoh(1)), to_nx(generate_poh(1)))


class TestStructuralInvariants:
    @pytest.mark.parametrize("gen", [generate_poh, generate_tp, generate_dpoh])
    @pytest.mark.parametrize("n", range(1, 7))
    def test_connected(self, gen, n):
        assert gen(n).is_connected()

    @pytest.mark.parametrize("n", range(1, 7))
    def test_centroid_degrees(self, n):
        for gen, want in ((generate_poh, 4), (generate_dpoh, 4), (generate_tp, 3)):
            g = gen(n)
            degs = {g.degree(r.key) for r in g.vertices if r.role == "Centroid"}
            assert degs == {want}

    @pytest.mark.parametrize("n", range(1, 5))
    def test_corner_to_centroid_ratio(self, n):
        g = generate_poh(n)
        roles = Counter(r.role for r in g.vertices)
        assert roles["Centroid"] == 18 * n * n
        assert roles["OxideCorner"] == 9 * n * n + 3 * n

    @pytest.mark.parametrize("gen", [generate_poh, generate_tp, generate_dpoh])
    def test_rejects_bad_dimension(self, gen):
        with pytest.raises(InvalidDimension):
            gen(0)
