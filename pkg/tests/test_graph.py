import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from incidence_coloring.errors import GraphFormatError
from incidence_coloring.graph import (GENERATORS, Graph, classify, complete, complete_bipartite, cycle,
                                      dump_graph, fan, generate, load_graph, path, random_maximal_outerplanar,
                                      random_outerplanar, random_tree, star, to_dot)


def _is_outerplanar(g: Graph) -> bool:
    # G is outerplanar iff G plus a vertex joined to everything is planar
    nxg = nx.Graph(g.edge_list())
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from((0, v) for v in g.vertices())
    return nx.check_planarity(nxg)[0]


class TestLoad:
    def test_path_p3(self):
        g = load_graph("3 2\n1 2\n2 3")
        assert [g.degree(v) for v in g.vertices()] == [1, 2, 1]

    def test_k4(self):
        g = load_graph("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4")
        assert g.max_degree == 3
        assert g == complete(4)

    def test_self_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            load_graph("2 1\n1 1")

    def test_crlf_and_trailing_blank_lines(self):
        g = load_graph("3 2\r\n1 2\r\n3 2\r\n\r\n")
        assert g.edge_list() == [(1, 2), (2, 3)]

    @pytest.mark.parametrize("text, where", [
        ("", "line 1"),
        ("3", "line 1"),
        ("3 2\n1 2", "line 1"),
        ("3 1\n1 4", "line 2"),
        ("3 2\n1 2\n2 1", "line 3"),
        ("3 1\n1 x", "line 2"),
        ("-1 0", "line 1"),
    ])
    def test_errors_name_the_line(self, text, where):
        with pytest.raises(GraphFormatError, match=where):
            load_graph(text)

    def test_dump_round_trip(self):
        g = random_outerplanar(40, 0.3, 5)
        assert load_graph(dump_graph(g)) == g

    def test_dot_export_labels_edges(self):
        from incidence_coloring import color
        g = path(3)
        dot = to_dot(g, color(g).coloring)
        assert dot.startswith("graph G {") and '1 -- 2 [taillabel="0", headlabel="1"]' in dot


class TestGraph:
    def test_rejects_self_loops_and_duplicates(self):
        with pytest.raises(GraphFormatError):
            Graph(2, [(1, 1)])
        with pytest.raises(GraphFormatError):
            Graph(2, [(1, 2), (2, 1)])
        with pytest.raises(GraphFormatError):
            Graph(2, [(1, 3)])

    def test_edgeless_max_degree(self):
        assert Graph(3).max_degree == 0
        assert Graph(0).max_degree == 0

    @given(st.integers(3, 30), st.integers(0, 10 ** 6))
    def test_incidence_counts(self, n, seed):
        g = random_maximal_outerplanar(n, seed)
        assert len(list(g.incidences())) == 2 * g.m
        for u in g.vertices():
            assert len(g.strong(u)) == len(g.weak(u)) == g.degree(u)
            for w in g.adj[u]:
                assert u in g.adj[w]


class TestClassify:
    def test_cycle(self):
        assert classify(cycle(5)).tag == "Cycle"

    def test_complete_bipartite_witness(self):
        cls = classify(complete_bipartite(3, 2))
        assert cls.tag == "CompleteBipartite" and cls.params == (3, 2)
        left, right = cls.witness["parts"]
        assert sorted(left + right) == [1, 2, 3, 4, 5] and len(left) == 3

    def test_k4_minus_edge(self):
        g = Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
        assert classify(g).tag == "SubcubicCandidate"

    @pytest.mark.parametrize("g, tag", [
        (Graph(3), "Empty"), (Graph(4, [(1, 2), (3, 4)]), "MatchingK2s"), (path(6), "Path"),
        (complete(5), "Complete"), (star(4), "CompleteBipartite"), (random_tree(30, 2), "Tree"),
        (fan(6), "General"),
    ])
    def test_tags(self, g, tag):
        assert classify(g).tag == tag

    def test_cycle_stable(self):
        assert all(classify(generate("cycle", n)).tag == "Cycle" for n in range(3, 201))


class TestGenerators:
    def test_fan(self):
        g = fan(4)
        assert g.max_degree == 4 and g.adj[1] == (2, 3, 4, 5)
        assert [g.has_edge(a, a + 1) for a in (2, 3, 4)] == [True] * 3

    def test_maximal_outerplanar_edge_count(self):
        g = random_maximal_outerplanar(6, 11)
        assert g.n == 6 and g.m == 9

    def test_path_one(self):
        assert path(1).n == 1 and path(1).m == 0

    def test_random_tree_is_tree(self):
        g = random_tree(500, 3)
        assert g.m == 499 and g.is_connected()

    def test_reproducible(self):
        assert random_outerplanar(200, 0.4, 9) == random_outerplanar(200, 0.4, 9)
        assert random_tree(200, 1) != random_tree(200, 2)

    def test_max_degree_cap(self):
        for seed in range(20):
            assert random_outerplanar(300, 0.2, seed, max_degree=5).max_degree <= 5

    @pytest.mark.parametrize("n", range(3, 9))
    def test_small_outerplanar_outputs_have_no_forbidden_minor(self, n):
        for seed in range(25):
            assert _is_outerplanar(random_maximal_outerplanar(n, seed))
            assert _is_outerplanar(random_outerplanar(n, 0.5, seed))

    def test_forbidden_minors_detected(self):
        assert not _is_outerplanar(complete(4))
        assert not _is_outerplanar(complete_bipartite(2, 3))

    def test_generate_unknown(self):
        with pytest.raises(ValueError):
            generate("hypercube", 3)

    def test_all_generators_registered(self):
        assert {"path", "cycle", "star", "complete", "complete_bipartite", "random_tree", "fan",
                "random_maximal_outerplanar", "random_outerplanar"} <= set(GENERATORS)

    def test_degrees_array_is_read_only(self):
        g = cycle(4)
        with pytest.raises(ValueError):
            g.degrees[1] = 7
        assert np.all(g.degrees[1:] == 2)
