import json
from fractions import Fraction

import pytest

from nets import c6, custom, k3, p3
from octanet.generators import generate_dpoh, generate_poh, generate_tp
from octanet.graphs import (
    DisconnectedGraph,
    Network,
    ROLE_CORNER,
    UnknownVertex,
    VertexRecord,
)

ALL_GENERATORS = [generate_poh, generate_tp, generate_dpoh]


class TestBuildValidation:
    def test_rejects_self_loop(self):
        recs = [VertexRecord(0, ROLE_CORNER, (Fraction(0), Fraction(0)))]
        with pytest.raises(ValueError, match="self-loop"):
            Network.build(recs, [(0, 0)])

    def test_rejects_parallel_edge(self):
        with pytest.raises(ValueError, match="parallel"):
            custom([(0, 1), (1, 0), (1, 2)])

    def test_rejects_unknown_endpoint(self):
        recs = [VertexRecord(0, ROLE_CORNER, (Fraction(0), Fraction(0)))]
        with pytest.raises(UnknownVertex):
            Network.build(recs, [(0, 5)])

    def test_rejects_duplicate_key(self):
        recs = [
            VertexRecord(0, ROLE_CORNER, (Fraction(0), Fraction(0))),
            VertexRecord(0, ROLE_CORNER, (Fraction(1), Fraction(0))),
        ]
        with pytest.raises(ValueError, match="duplicate"):
            Network.build(recs, [])


class TestDegreeQueries:
    def test_degree_examples_on_families(self):
        poh1 = generate_poh(1)
        cents = [r.key for r in poh1.vertices if r.role == "Centroid"]
        assert all(poh1.degree(k) == 4 for k in cents)
        shared = [r.key for r in poh1.vertices if r.key[0] == "shared"]
        assert shared and all(poh1.degree(k) == 8 for k in shared)
        tp1 = generate_tp(1)
        assert all(
            tp1.degree(r.key) == 3 for r in tp1.vertices if r.role == "Centroid"
        )

    def test_degree_sum_small_cases(self):
        g = k3()
        for v in (0, 1, 2):
            assert g.degree_sum(v) == 4
        star = custom([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
        # vertex 0 has neighbour degrees {3, 3, 1, 1}
        assert g.degree(0) == 2
        assert star.degree_sum(0) == 8

    def test_degree_sum_occurring_classes(self):
        poh2 = generate_poh(2)
        sums = {poh2.degree_sum(r.key) for r in poh2.vertices}
        assert 20 in sums and 48 in sums

    def test_unknown_vertex(self):
        g = k3()
        with pytest.raises(UnknownVertex):
            g.degree("nope")
        with pytest.raises(UnknownVertex):
            g.degree_sum("nope")

    @pytest.mark.parametrize("gen", ALL_GENERATORS)
    @pytest.mark.parametrize("n", range(1, 5))
    def test_degree_sum_matches_recomputation(self, gen, n):
        g = gen(n)
        for r in g.vertices:
            assert g.degree_sum(r.key) == sum(g.degree(u) for u in g.neighbors(r.key))


class TestPartitions:
    def test_k3(self):
        assert k3().edge_partition("degree").as_dict() == {(2, 2): 3}

    def test_poh1_and_tp1(self):
        assert generate_poh(1).edge_partition("degree").as_dict() == {
            (4, 4): 30, (4, 8): 36, (8, 8): 6,
        }
        assert generate_tp(1).edge_partition("degree").as_dict() == {
            (3, 3): 24, (3, 6): 24, (6, 6): 6,
        }

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError, match="partition kind"):
            k3().edge_partition("colour")

    @pytest.mark.parametrize("gen", ALL_GENERATORS)
    @pytest.mark.parametrize("n", range(1, 9))
    def test_completeness_and_handshake(self, gen, n):
        g = gen(n)
        assert sum(g.degree(r.key) for r in g.vertices) == 2 * g.edge_count
        for kind in ("degree", "degsum"):
            assert g.edge_partition(kind).total == g.edge_count


class TestDistances:
    def test_small_graphs(self):
        m = k3().distance_matrix()
        assert all(m[i][j] == (0 if i == j else 1) for i in range(3) for j in range(3))
        m = p3().distance_matrix()
        assert m[0][2] == 2
        m = c6().distance_matrix()
        assert max(max(row) for row in m) == 3

    def test_symmetric_zero_diagonal(self):
        m = generate_tp(1).distance_matrix()
        size = len(m)
        assert all(m[i][i] == 0 for i in range(size))
        assert all(m[i][j] == m[j][i] for i in range(size) for j in range(size))

    def test_disconnected_raises(self):
        g = custom([(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraph):
            g.distance_matrix()
        assert not g.is_connected()


class TestExports:
    @pytest.mark.parametrize("gen", ALL_GENERATORS)
    def test_json_determinism(self, gen):
        a = gen(2).to_json()
        b = gen(2).to_json()
        assert a == b

    def test_json_schema(self):
        doc = generate_poh(1).to_json_doc()
        assert doc["family"] == "POH"
        assert doc["n"] == 1
        assert len(doc["vertices"]) == 30
        assert len(doc["edges"]) == 72
        v0 = doc["vertices"][0]
        assert set(v0) == {"id", "key", "role", "x", "y"}
        assert isinstance(v0["x"], str)
        assert doc["edges"] == sorted(doc["edges"])
        assert all(i < j for i, j in doc["edges"])

    def test_json_roundtrip(self):
        g = generate_tp(1)
        doc = json.loads(g.to_json())
        h = Network.from_json_doc(doc)
        assert h.vertex_count == g.vertex_count
        assert h.edge_count == g.edge_count
        assert h.edge_partition("degree") == g.edge_partition("degree")
        assert h.edge_partition("degsum") == g.edge_partition("degsum")

    def test_dot_shapes_and_edges(self):
        dot = generate_poh(1).to_dot()
        assert dot.count(" -- ") == 72
        assert "shape=circle" in dot and "shape=box" in dot
        assert dot.startswith("graph POH_1 {")

    def test_edgelist(self):
        lines = generate_tp(1).to_edgelist().splitlines()
        assert len(lines) == 54
        assert all(len(line.split()) == 2 for line in lines)

    def test_positions_distinct(self):
        for gen in ALL_GENERATORS:
            g = gen(3)
            seen = {r.pos for r in g.vertices}
            assert len(seen) == g.vertex_count
