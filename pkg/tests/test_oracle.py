import numpy as np
import pytest

from incidence_coloring import (BudgetExceeded, check_defective, exact_defective_chromatic,
                                find_coloring_exhaustive, incidence_defectivity, snark_check)
from incidence_coloring.graph import Graph, complete, cycle, path, petersen, random_outerplanar
from incidence_coloring.oracle import SearchStats, incidence_order


class TestFindColoring:
    def test_k4_three_colours_exhausted(self):
        found, stats = find_coloring_exhaustive(complete(4), 1, 3)
        assert found is None and stats.outcome == "exhausted"

    def test_h_three_colours_exhausted(self, h_graph):
        found, stats = find_coloring_exhaustive(h_graph, 1, 3)
        assert found is None and stats.outcome == "exhausted"

    def test_proper_p3(self):
        found, stats = find_coloring_exhaustive(path(3), 0, 3)
        assert stats.outcome == "found" and check_defective(path(3), found, 0).valid
        assert find_coloring_exhaustive(path(3), 0, 2)[1].outcome == "exhausted"

    def test_budget(self):
        found, stats = find_coloring_exhaustive(petersen(), 0, 4, budget=10)
        assert found is None and stats.outcome == "budget-exceeded"
        assert stats.nodes <= 11

    def test_deterministic(self):
        g = random_outerplanar(9, 0.3, 3)
        runs = [find_coloring_exhaustive(g, 1, 3)[1].nodes for _ in range(3)]
        assert len(set(runs)) == 1

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            find_coloring_exhaustive(path(3), -1, 2)

    def test_order_covers_every_incidence(self):
        g = random_outerplanar(15, 0.5, 1)
        assert sorted(incidence_order(g)) == sorted(g.incidences())


class TestExactChromatic:
    @pytest.mark.parametrize("g, d, value", [
        (complete(4), 1, 4), (complete(4), 2, 3), (complete(5), 1, 4), (cycle(6), 1, 2),
        (path(5), 1, 2), (cycle(5), 1, 2), (path(5), 0, 3), (Graph(3), 1, 0),
    ])
    def test_values(self, g, d, value):
        assert exact_defective_chromatic(g, d, 2 * g.m + 1) == value

    def test_above_kmax(self):
        assert exact_defective_chromatic(complete(4), 1, 3) is None

    def test_budget_raises(self):
        with pytest.raises(BudgetExceeded) as info:
            exact_defective_chromatic(petersen(), 0, 6, budget=5)
        assert info.value.stats.outcome == "budget-exceeded"

    def test_totals(self):
        totals = SearchStats()
        assert exact_defective_chromatic(complete(4), 1, 5, totals=totals) == 4
        assert totals.outcome == "found" and totals.nodes > 0

    def test_chain_on_small_graphs(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(3, 6))
            edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.6]
            g = Graph(n, edges)
            if g.m == 0:
                continue
            chi = [exact_defective_chromatic(g, d, 2 * g.m) for d in (0, 1, 2)]
            assert chi[0] >= chi[1] >= chi[2] >= g.max_degree


class TestDefectivity:
    def test_k4(self):
        assert incidence_defectivity(complete(4), 5) == 2

    def test_k2_unbounded(self):
        assert incidence_defectivity(path(2), 5) is None

    def test_cycle(self):
        assert incidence_defectivity(cycle(5), 3) == 1


class TestSnark:
    def test_petersen(self):
        outcome, stats = snark_check(petersen(), budget=10 ** 7)
        assert outcome == "exhausted"

    def test_k4_is_accepted(self):
        outcome, _ = snark_check(complete(4), budget=10 ** 6)
        assert outcome in ("found", "exhausted")

    def test_preconditions(self):
        with pytest.raises(ValueError):
            snark_check(cycle(5))
        bridged = Graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4)])
        with pytest.raises(ValueError):
            snark_check(bridged)
