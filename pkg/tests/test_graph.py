import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from netdisrupt import Graph, WeightMode
from netdisrupt.graph import (DuplicateEdgeError, DuplicateNodeError, GraphError, InvalidWeightError,
                              MissingNodeError, SelfLoopError)


def path(n, weights=None):
    weights = weights or [1] * (n - 1)
    return Graph.from_edges([(k, k + 1, weights[k]) for k in range(n - 1)])


def triangle():
    return Graph.from_edges([(0, 1), (1, 2), (0, 2)])


@st.composite
def graphs(draw, max_nodes=12, max_weight=10):
    n = draw(st.integers(0, max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph()
    for k in range(n):
        g.add_node(k)
    for i, j in chosen:
        g.add_edge(i, j, draw(st.integers(1, max_weight)))
    return g


class TestMutation:
    def test_add_node(self):
        g = Graph()
        g.add_node(0)
        assert (g.number_of_nodes(), g.number_of_edges()) == (1, 0)
        g.add_node(1)
        assert g.number_of_nodes() == 2
        assert g.degree(1) == 0

    def test_duplicate_node(self):
        g = Graph()
        g.add_node(0)
        with pytest.raises(DuplicateNodeError) as exc:
            g.add_node(0)
        assert exc.value.node == 0

    @pytest.mark.parametrize("bad", [-1, 1.5, "3", True])
    def test_node_id_must_be_non_negative_int(self, bad):
        with pytest.raises(GraphError):
            Graph().add_node(bad)

    def test_node_attributes(self):
        g = Graph()
        g.add_node(4, {"clan": "Mistretta", "role": "boss"})
        assert g.attributes(4) == {"clan": "Mistretta", "role": "boss"}

    def test_add_edge_symmetric(self):
        g = Graph.from_edges([], nodes=[0, 1])
        g.add_edge(0, 1, 3)
        assert g.weight(0, 1) == g.weight(1, 0) == 3
        assert g.degree(0) == g.degree(1) == 1

    def test_edge_errors_are_distinct(self):
        g = Graph.from_edges([(0, 1)])
        with pytest.raises(SelfLoopError):
            g.add_edge(0, 0, 1)
        with pytest.raises(MissingNodeError):
            g.add_edge(0, 7, 1)
        with pytest.raises(DuplicateEdgeError):
            g.add_edge(1, 0, 2)
        g.add_node(2)
        for w in (-2, 0, float("nan")):
            with pytest.raises(InvalidWeightError):
                g.add_edge(0, 2, w)

    def test_remove_cut_vertex(self):
        g = path(3)
        g.remove_node(1)
        assert g.nodes == [0, 2]
        assert g.number_of_edges() == 0

    def test_remove_from_triangle(self):
        g = triangle()
        g.remove_node(0)
        assert list(g.edges()) == [(1, 2, 1)]

    def test_remove_missing(self):
        with pytest.raises(MissingNodeError):
            triangle().remove_node(9)

    def test_ids_survive_removal(self):
        g = path(5)
        g.remove_node(2)
        assert g.nodes == [0, 1, 3, 4]
        assert g.has_edge(3, 4)


class TestDegree:
    def test_triangle(self):
        g = triangle()
        assert all(g.degree(n, WeightMode.UNWEIGHTED) == 2 for n in g.nodes)

    def test_weighted_star(self):
        g = Graph.from_edges([(0, 1, 2), (0, 2, 3), (0, 3, 5)])
        assert g.degree(0, "weighted") == 10
        assert g.degree(0, "unweighted") == 3

    def test_missing(self):
        with pytest.raises(MissingNodeError):
            triangle().degree(5)


class TestComponents:
    def test_partition(self):
        g = Graph.from_edges([(0, 1), (1, 2)], nodes=[3])
        part = g.connected_components()
        assert part.components == [frozenset({0, 1, 2}), frozenset({3})]
        assert part.lcc_size == 3

    def test_empty(self):
        part = Graph().connected_components()
        assert len(part) == 0 and part.lcc_size == 0
        assert Graph().lcc_size() == 0

    def test_matches_union_find(self):
        rng = random.Random(7)
        for _ in range(50):
            g = oracles.random_graph(rng, rng.randint(1, 40), 0.05)
            lcc, count = oracles.union_find_lcc(g.nodes, g.edges())
            part = g.connected_components()
            assert (part.lcc_size, len(part)) == (lcc, count)


class TestShortestPaths:
    def test_weighted_path(self):
        g = path(3, [4, 1])
        assert g.shortest_path_lengths(0, WeightMode.WEIGHTED) == {0: 0, 1: 4, 2: 5}
        assert g.shortest_path_lengths(0, WeightMode.UNWEIGHTED) == {0: 0, 1: 1, 2: 2}

    def test_unreachable_omitted(self):
        g = Graph.from_edges([(0, 1)], nodes=[2])
        assert g.shortest_path_lengths(0) == {0: 0, 1: 1}

    def test_missing_source(self):
        with pytest.raises(MissingNodeError):
            path(3).shortest_path_lengths(8)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_against_simple_path_enumeration(self, seed):
        rng = random.Random(seed)
        g = oracles.random_graph(rng, 10, 0.3)
        for mode, weighted in ((WeightMode.WEIGHTED, True), (WeightMode.UNWEIGHTED, False)):
            adj = oracles.adjacency(g, weighted)
            for s in g.nodes:
                assert g.shortest_path_lengths(s, mode) == oracles.simple_path_costs(adj, s)

    def test_max_shortest_path(self):
        assert path(3).max_shortest_path() == 2
        assert Graph().max_shortest_path() == 0
        assert Graph.from_edges([], nodes=[0]).max_shortest_path() == 0
        assert Graph.from_edges([(0, 1), (2, 3), (3, 4)]).max_shortest_path() == 2
        assert path(3, [4, 1]).max_shortest_path("weighted") == 5


class TestFrontier:
    def test_path(self):
        assert path(4).ball_frontier(0, 2) == {2}

    def test_triangle(self):
        assert triangle().ball_frontier(0, 2) == set()

    def test_hop_based_even_with_weights(self):
        g = Graph.from_edges([(0, 1, 10), (1, 2, 1), (0, 2, 100)])
        assert g.ball_frontier(0, 1) == {1, 2}

    def test_missing(self):
        with pytest.raises(MissingNodeError):
            triangle().ball_frontier(3, 1)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_against_bfs_levels(self, seed):
        rng = random.Random(100 + seed)
        g = oracles.random_graph(rng, 12, 0.25)
        adj = oracles.adjacency(g)
        for i in g.nodes:
            levels = oracles.bfs_levels(adj, i)
            assert g.ball_frontier(i, 2) == {j for j, lvl in levels.items() if lvl == 2}


class TestProperties:
    @given(graphs())
    def test_undirected_and_handshake(self, g):
        for i, j, w in g.edges():
            assert g.weight(i, j) == g.weight(j, i) == w
        assert sum(g.degree(n) for n in g.nodes) == 2 * g.number_of_edges()

    @given(graphs(), st.data())
    def test_removal_never_grows_lcc(self, g, data):
        if not len(g):
            return
        n = data.draw(st.sampled_from(g.nodes))
        before = g.lcc_size()
        h = g.copy()
        h.remove_node(n)
        assert h.lcc_size() <= before
        assert g.lcc_size() == before

    @given(graphs(max_weight=1))
    def test_unit_weights_bfs_equals_dijkstra(self, g):
        for s in g.nodes:
            assert g.shortest_path_lengths(s, "weighted") == g.shortest_path_lengths(s, "unweighted")

    @settings(max_examples=50)
    @given(graphs(max_nodes=9))
    def test_triangle_inequality(self, g):
        dist = {s: g.shortest_path_lengths(s, "weighted") for s in g.nodes}
        for u, v, w in itertools.permutations(g.nodes, 3):
            if v in dist[u] and w in dist[v]:
                assert dist[u][w] <= dist[u][v] + dist[v][w]

    @given(graphs(), st.data())
    def test_frontiers_disjoint(self, g, data):
        if not len(g):
            return
        i = data.draw(st.sampled_from(g.nodes))
        fronts = [g.ball_frontier(i, r) for r in range(1, 5)]
        for a, b in itertools.combinations(fronts, 2):
            assert not a & b
