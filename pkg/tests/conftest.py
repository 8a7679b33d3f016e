import itertools

import pytest
from hypothesis import settings

from incidence_coloring.graph import Graph, obstruction_graph

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture
def h_graph() -> Graph:
    """Outerplanar, maximum degree 3, no 1-defective 3-coloring."""
    return obstruction_graph()


def connected_graphs_up_to_iso(n: int) -> list[Graph]:
    """One representative of every connected graph on ``n`` vertices (brute force)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    perms = list(itertools.permutations(range(1, n + 1)))
    seen, reps = set(), []
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        canon = min(
            tuple(sorted((min(p[a - 1], p[b - 1]), max(p[a - 1], p[b - 1])) for a, b in edges))
            for p in perms
        )
        if canon not in seen:
            seen.add(canon)
            reps.append(g)
    return reps
