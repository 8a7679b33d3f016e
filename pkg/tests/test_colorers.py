import time

import networkx as nx
import numpy as np
import pytest

from incidence_coloring import (IncidenceColoring, check_defective, color, color_complete,
                                color_complete_bipartite, color_cycle, color_path, color_tree,
                                defect_of, exact_defective_chromatic)
from incidence_coloring.colorers import K4_ONE_DEFECTIVE_4, K4_TWO_DEFECTIVE_3
from incidence_coloring.errors import UnsupportedGraphError
from incidence_coloring.graph import (Graph, complete, complete_bipartite, cycle, fan, path,
                                      random_tree, star)


def _tree(nxt: nx.Graph) -> Graph:
    return Graph(nxt.number_of_nodes(), [(a + 1, b + 1) for a, b in nxt.edges()])


class TestPathsAndCycles:
    def test_p4_matches_reference(self):
        g = path(4)
        res = color_path(g)
        assert res.k == 2 and defect_of(g, res.coloring) == 1
        assert res.coloring.to_mapping() == {(1, 2): 0, (2, 1): 1, (2, 3): 0, (3, 2): 1,
                                             (3, 4): 0, (4, 3): 1}

    def test_p3(self):
        assert color_path(path(3)).k == 2

    def test_k2(self):
        res = color_path(path(2))
        assert res.coloring.to_mapping() == {(1, 2): 0, (2, 1): 1}

    def test_c3(self):
        g = cycle(3)
        res = color_cycle(g)
        assert res.k == 2 and check_defective(g, res.coloring, 1).valid
        for u in g.vertices():
            assert sorted(res.coloring[i] for i in g.strong(u)) == [0, 1]
            assert sorted(res.coloring[i] for i in g.weak(u)) == [0, 1]

    def test_c4(self):
        assert color_cycle(cycle(4)).k == 2

    def test_c100_needs_defect(self):
        g = cycle(100)
        c = color_cycle(g).coloring
        assert check_defective(g, c, 1).valid and not check_defective(g, c, 0).valid

    def test_wrong_class(self):
        with pytest.raises(UnsupportedGraphError):
            color_path(cycle(5))
        with pytest.raises(UnsupportedGraphError):
            color_cycle(path(5))


class TestTrees:
    @pytest.mark.parametrize("seed", range(10))
    def test_random_tree(self, seed):
        g = random_tree(2000, seed)
        res = color_tree(g)
        assert res.k == g.max_degree
        assert check_defective(g, res.coloring, 1).valid

    def test_weak_sets_are_rainbow(self):
        for seed in range(20):
            g = random_tree(300, seed)
            c = color_tree(g).coloring
            for u in g.vertices():
                weak = [c[i] for i in g.weak(u)]
                assert len(set(weak)) == len(weak)

    def test_star(self):
        g = star(5)
        assert color_tree(g).k == 5

    def test_not_a_tree(self):
        with pytest.raises(UnsupportedGraphError):
            color_tree(cycle(5))

    def test_runtime_is_linear(self):
        def per_vertex(n):
            g = random_tree(n, 0)
            t0 = time.perf_counter()
            color_tree(g)
            return (time.perf_counter() - t0) / n
        small, large = per_vertex(20_000), per_vertex(160_000)
        assert large < 3 * small


class TestCompleteBipartite:
    def test_k55(self):
        g = complete_bipartite(5, 5)
        res = color_complete_bipartite(g)
        assert res.k == 5 and check_defective(g, res.coloring, 1).valid

    def test_k11(self):
        assert color_complete_bipartite(complete_bipartite(1, 1)).k == 2

    def test_unbalanced(self):
        g = complete_bipartite(3, 7)
        res = color_complete_bipartite(g)
        assert res.k == 7 and check_defective(g, res.coloring, 1).valid

    def test_rejects_other_graphs(self):
        with pytest.raises(UnsupportedGraphError):
            color_complete_bipartite(cycle(6))


class TestComplete:
    def test_k4_tables_are_valid(self):
        g = complete(4)
        assert check_defective(g, IncidenceColoring(g, 4, np.array(K4_ONE_DEFECTIVE_4)), 1).valid
        assert check_defective(g, IncidenceColoring(g, 3, np.array(K4_TWO_DEFECTIVE_3)), 2).valid

    def test_k4(self):
        assert color_complete(4, 1).k == 4
        assert color_complete(4, 2).k == 3
        assert exact_defective_chromatic(complete(4), 1, 3) is None

    @pytest.mark.parametrize("n", [3, 5, 6, 7, 8, 12])
    def test_latin_route(self, n):
        res = color_complete(n, 1)
        assert res.k == n - 1 and res.method == "latin"
        assert check_defective(complete(n), res.coloring, 1).valid

    def test_k3_from_circulant(self):
        # 1-based colours 1, 2, 2, 1, 1, 2 shifted to residues
        res = color_complete(3, 1)
        assert res.coloring.to_mapping() == {(1, 2): 0, (2, 1): 1, (1, 3): 1, (3, 1): 0,
                                             (2, 3): 0, (3, 2): 1}

    def test_small(self):
        assert color_complete(1, 1).k == 0
        assert color_complete(2, 1).k == 2


class TestDispatcher:
    @pytest.mark.parametrize("g, d, k, method", [
        (cycle(7), 1, 2, "cycle"),
        (complete(6), 1, 5, "latin"),
        (fan(5), 1, 5, "outerplanar-conditional"),
        (path(5), 1, 2, "path"),
        (complete_bipartite(3, 2), 1, 3, "complete-bipartite"),
        (Graph(4, [(1, 2), (3, 4)]), 1, 2, "matching"),
        (Graph(3), 1, 0, "empty"),
    ])
    def test_routes(self, g, d, k, method):
        res = color(g, d)
        assert (res.k, res.method) == (k, method)
        assert check_defective(g, res.coloring, d).valid

    def test_tree_route(self):
        g = random_tree(200, 4)
        res = color(g)
        assert res.method == "tree" and res.k == g.max_degree

    def test_rejects_d_zero(self):
        with pytest.raises(ValueError):
            color(path(3), 0)

    def test_non_outerplanar_too_big(self):
        g = Graph(5, [(a, b) for a in range(1, 6) for b in range(a + 1, 6) if (a, b) != (4, 5)])
        with pytest.raises(UnsupportedGraphError):
            color(g)

    def test_small_non_outerplanar_by_search(self):
        g = complete_bipartite(2, 3)
        g = Graph(6, g.edge_list() + [(5, 6)])     # K_{2,3} plus a pendant edge
        res = color(g)
        assert res.method == "oracle" and res.optimal
        assert res.k == exact_defective_chromatic(g, 1, 2 * g.m)


class TestOptimalityAgainstOracle:
    @staticmethod
    def graphs():
        out = [path(n) for n in range(2, 8)] + [cycle(n) for n in range(3, 8)]
        out += [complete(n) for n in range(2, 6)]
        out += [complete_bipartite(a, b) for a in range(1, 7) for b in range(1, a + 1) if a + b <= 7]
        out += [_tree(t) for n in range(2, 8) for t in nx.nonisomorphic_trees(n)]
        return out

    @pytest.mark.parametrize("d", [1, 2])
    def test_dispatcher_is_optimal(self, d):
        for g in self.graphs():
            res = color(g, d)
            assert res.optimal
            assert res.k == exact_defective_chromatic(g, d, 2 * g.m), (g.edge_list(), d)
