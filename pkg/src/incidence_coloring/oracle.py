"""Exact exponential-time search for d-defective incidence colorings.

The search assigns incidences in a fixed order: vertices are visited
breadth-first from a maximum-degree vertex (neighbours by descending degree,
then id) and each vertex contributes its strong incidences as a block.  Value
symmetry is broken by only allowing a colour one above the largest used so
far, which in particular fixes the first incidence to colour 0.
"""
from __future__ import annotations

import sys
import time
from collections import deque
from dataclasses import dataclass

from .coloring import IncidenceColoring
from .errors import BudgetExceeded
from .graph import Graph
from .verify import check_defective

DEFAULT_BUDGET = 10 ** 8
SNARK_BUDGET = 10 ** 10


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    elapsed: float = 0.0
    outcome: str = "exhausted"      # found | exhausted | budget-exceeded

    def to_doc(self) -> dict:
        return {"nodes": self.nodes, "max_depth": self.max_depth,
                "elapsed": round(self.elapsed, 6), "outcome": self.outcome}


class _OutOfBudget(Exception):
    pass


def incidence_order(g: Graph) -> list[tuple[int, int]]:
    deg = g.degrees
    key = lambda v: (-int(deg[v]), v)  # noqa: E731
    rank: dict[int, int] = {}
    order: list[int] = []
    for start in sorted(g.vertices(), key=key):
        if start in rank:
            continue
        rank[start] = len(order)
        order.append(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v], key=key):
                if w not in rank:
                    rank[w] = len(order)
                    order.append(w)
                    queue.append(w)
    return [(v, w) for v in order for w in sorted(g.adj[v], key=rank.__getitem__)]


class _Search:
    def __init__(self, g: Graph, d: int, k: int, budget: int, progress=None):
        self.g, self.d, self.k, self.budget = g, d, k, budget
        self.order = incidence_order(g)
        pos = {inc: i for i, inc in enumerate(self.order)}
        self.partner = [pos[(w, v)] for v, w in self.order]
        self.owner = [v for v, _ in self.order]
        self.target = [w for _, w in self.order]
        self.color = [-1] * len(self.order)
        self.strong = [[0] * k for _ in range(g.n + 1)]
        self.weak = [[0] * k for _ in range(g.n + 1)]
        self.stats = SearchStats()
        self.progress = progress

    def run(self) -> bool:
        t0 = time.perf_counter()
        limit = sys.getrecursionlimit()
        if len(self.order) + 100 > limit:
            sys.setrecursionlimit(len(self.order) + 200)
        try:
            found = self._dfs(0, -1)
            self.stats.outcome = "found" if found else "exhausted"
        except _OutOfBudget:
            found = False
            self.stats.outcome = "budget-exceeded"
        finally:
            sys.setrecursionlimit(limit)
            self.stats.elapsed = time.perf_counter() - t0
        return found

    def _dfs(self, i: int, top: int) -> bool:
        if i == len(self.order):
            return True
        stats = self.stats
        if i > stats.max_depth:
            stats.max_depth = i
        p, q = self.owner[i], self.target[i]
        sp, wp, sq, wq = self.strong[p], self.weak[p], self.strong[q], self.weak[q]
        partner_color = self.color[self.partner[i]]
        d = self.d
        for c in range(min(top + 2, self.k)):
            if sp[c] or c == partner_color or wp[c] > d:
                continue
            if sq[c] and wq[c] >= d:
                continue
            stats.nodes += 1
            if stats.nodes > self.budget:
                raise _OutOfBudget
            if self.progress is not None and stats.nodes % 1_000_000 == 0:
                self.progress(stats)
            self.color[i] = c
            sp[c] += 1
            wq[c] += 1
            if self._dfs(i + 1, c if c > top else top):
                return True
            sp[c] -= 1
            wq[c] -= 1
            self.color[i] = -1
        return False

    def coloring(self) -> IncidenceColoring:
        mapping = {inc: c for inc, c in zip(self.order, self.color)}
        return IncidenceColoring.from_mapping(self.g, self.k, mapping)


def find_coloring_exhaustive(g: Graph, d: int, k: int, budget: int = DEFAULT_BUDGET,
                             progress=None) -> tuple[IncidenceColoring | None, SearchStats]:
    """Complete backtracking for a d-defective k-coloring.

    ``stats.outcome == "exhausted"`` proves that none exists;
    ``"budget-exceeded"`` is inconclusive.
    """
    if d < 0 or k < 0:
        raise ValueError("d and k must be non-negative")
    if g.m and k == 0:
        return None, SearchStats()
    search = _Search(g, d, k, budget, progress)
    if not search.run():
        return None, search.stats
    result = search.coloring()
    assert check_defective(g, result, d).valid
    return result, search.stats


def exact_defective_chromatic(g: Graph, d: int, k_max: int, budget: int = DEFAULT_BUDGET,
                              totals: SearchStats | None = None) -> int | None:
    """Least ``k <= k_max`` admitting a d-defective k-coloring, else ``None``.

    Starts from the trivial lower bound ``max(Delta, 2)`` (for graphs with an
    edge); raises :class:`BudgetExceeded` if some ``k`` stays undecided.
    ``totals``, if given, accumulates the statistics of every search run and
    ends with the outcome of the last one.
    """
    if g.m == 0:
        if totals is not None:
            totals.outcome = "found"
        return 0
    for k in range(max(g.max_degree, 2), k_max + 1):
        found, stats = find_coloring_exhaustive(g, d, k, budget)
        if totals is not None:
            totals.nodes += stats.nodes
            totals.max_depth = max(totals.max_depth, stats.max_depth)
            totals.elapsed += stats.elapsed
            totals.outcome = stats.outcome
        if found is not None:
            return k
        if stats.outcome == "budget-exceeded":
            raise BudgetExceeded(f"k={k} undecided after {stats.nodes} nodes", stats)
    return None


def incidence_defectivity(g: Graph, d_max: int, budget: int = DEFAULT_BUDGET) -> int | None:
    """Least ``d <= d_max`` with ``chi^d = Delta``; ``None`` means it exceeds ``d_max``.

    A defect bound of ``Delta`` already makes condition (c) vacuous, so larger
    ``d`` are never tried.
    """
    if g.m == 0:
        raise ValueError("incidence defectivity needs at least one edge")
    delta = g.max_degree
    for d in range(0, min(d_max, delta) + 1):
        found, stats = find_coloring_exhaustive(g, d, delta, budget)
        if found is not None:
            return d
        if stats.outcome == "budget-exceeded":
            raise BudgetExceeded(f"d={d} undecided after {stats.nodes} nodes", stats)
    return None


def _has_bridge(g: Graph) -> bool:
    for a, b in g.edge_list():
        rest = Graph(g.n, [e for e in g.edge_list() if e != (a, b)])
        if not rest.is_connected():
            return True
    return False


def snark_check(g: Graph, budget: int = SNARK_BUDGET, progress=None) -> tuple[str, SearchStats]:
    """Search for a 1-defective 3-coloring of a bridgeless cubic graph.

    ``"exhausted"`` supports a lower bound of 4; ``"found"`` refutes it for
    this graph; ``"budget-exceeded"`` is inconclusive.
    """
    if g.n == 0 or any(g.degrees[1:] != 3):
        raise ValueError("snark_check expects a cubic graph")
    if not g.is_connected() or _has_bridge(g):
        raise ValueError("snark_check expects a connected bridgeless graph")
    _, stats = find_coloring_exhaustive(g, 1, 3, budget, progress)
    return stats.outcome, stats
