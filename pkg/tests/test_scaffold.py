from collections import Counter
from itertools import combinations

import pytest

from octanet.scaffold import (
    InvalidDimension,
    dominating_cells,
    honeycomb,
    silicate_cells,
)


def corner_census(cells):
    counts = Counter()
    for cell in cells:
        for c in cell.corners:
            counts[c.key] += 1
    return counts


class TestHoneycomb:
    @pytest.mark.parametrize("n,hexes,verts,edges", [
        (1, 1, 6, 6),
        (2, 7, 24, 30),
        (3, 19, 54, 72),
    ])
    def test_small_counts(self, n, hexes, verts, edges):
        hc = honeycomb(n)
        assert len(hc.hexagons) == hexes
        assert len(hc.vertices) == verts
        assert len(hc.edges) == edges

    @pytest.mark.parametrize("n", range(1, 9))
    def test_count_formulas(self, n):
        hc = honeycomb(n)
        assert len(hc.hexagons) == 3 * n * n - 3 * n + 1
        assert len(hc.vertices) == 6 * n * n
        assert len(hc.edges) == 9 * n * n - 3 * n

    @pytest.mark.parametrize("n", range(1, 6))
    def test_incidences_consistent(self, n):
        hc = honeycomb(n)
        vset = set(hc.vertices)
        # every edge has exactly two endpoint vertices, both in the patch
        for e in hc.edges:
            ends = hc.endpoints(e)
            assert len(ends) == 2
            assert all(v in vset for v in ends)
        # vertex degrees are 2 or 3 and edge-ends match vertex incidences
        end_count = Counter()
        for e in hc.edges:
            for v in hc.endpoints(e):
                end_count[v] += 1
        for v in hc.vertices:
            incident = hc.edges_at(v)
            assert len(incident) in (2, 3)
            assert end_count[v] == len(incident)

    def test_rejects_bad_dimension(self):
        with pytest.raises(InvalidDimension):
            honeycomb(0)
        with pytest.raises(InvalidDimension):
            honeycomb(-2)


class TestSilicateCells:
    def test_n1_layout(self):
        cells = silicate_cells(1)
        assert len(cells) == 6
        census = corner_census(cells)
        assert len(census) == 12
        assert sum(1 for v in census.values() if v == 2) == 6
        assert sum(1 for v in census.values() if v == 1) == 6
        kinds = Counter(k[0] for k in census)
        assert kinds == {"shared": 6, "pendant": 6}

    def test_n2_layout(self):
        cells = silicate_cells(2)
        assert len(cells) == 24
        assert len(corner_census(cells)) == 42

    @pytest.mark.parametrize("n", range(1, 9))
    def test_count_identities(self, n):
        cells = silicate_cells(n)
        census = corner_census(cells)
        assert len(cells) == 6 * n * n
        assert len(census) == 9 * n * n + 3 * n
        # no corner belongs to more than two cells; shared interior corners
        # belong to exactly two
        assert max(census.values()) <= 2
        shared = [k for k in census if k[0] == "shared"]
        assert all(census[k] == 2 for k in shared)
        assert len(shared) == 9 * n * n - 3 * n

    def test_three_distinct_corners_per_cell(self):
        for cell in silicate_cells(3):
            assert len({c.key for c in cell.corners}) == 3


class TestDominatingCells:
    def test_n1_matches_silicate_ring(self):
        dom = dominating_cells(1)
        sil = silicate_cells(1)
        assert len(dom) == len(sil) == 6
        # same cell complex shape: 6 cells in a closed ring, each sharing one
        # corner with each neighbour and keeping one private corner
        for cells in (dom, sil):
            census = corner_census(cells)
            assert sorted(census.values()) == [1] * 6 + [2] * 6
            adjacency = Counter()
            for a, b in combinations(range(len(cells)), 2):
                shared = {c.key for c in cells[a].corners} & {c.key for c in cells[b].corners}
                assert len(shared) <= 1
                if shared:
                    adjacency[a] += 1
                    adjacency[b] += 1
            assert all(v == 2 for v in adjacency.values())

    def test_n2_counts(self):
        cells = dominating_cells(2)
        assert len(cells) == 42
        census = corner_census(cells)
        outer_shared = [k for k, v in census.items() if k[0] == "outer" and v == 2]
        assert len(outer_shared) == 12

    @pytest.mark.parametrize("n", range(1, 9))
    def test_count_identities(self, n):
        cells = dominating_cells(n)
        hexcount = 3 * n * n - 3 * n + 1
        assert len(cells) == 6 * hexcount
        census = corner_census(cells)
        assert len(census) == 27 * n * n - 21 * n + 6
        assert max(census.values()) <= 2
        inner = [k for k in census if k[0] == "inner"]
        assert all(census[k] == 2 for k in inner)
        assert len(inner) == 6 * hexcount

    def test_rejects_bad_dimension(self):
        with pytest.raises(InvalidDimension):
            dominating_cells(0)
        with pytest.raises(InvalidDimension):
            silicate_cells(0)
