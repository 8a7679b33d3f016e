"""Closed-form optimal d-defective incidence colorings for special graph classes."""
from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

from .coloring import DefectiveColoringResult, IncidenceColoring
from .errors import UnsupportedGraphError, VerificationFailure
from .graph import Graph, classify
from .latin import latin_square_no_principal
from .verify import check_defective

# Found by exhaustive search (oracle.find_coloring_exhaustive on K_4) and
# re-verified by the test-suite.  Rows follow K_4's canonical edge order
# (1,2) (1,3) (1,4) (2,3) (2,4) (3,4); columns are (smaller, larger) endpoint.
K4_ONE_DEFECTIVE_4 = ((0, 1), (1, 2), (2, 0), (0, 3), (2, 1), (0, 3))
K4_TWO_DEFECTIVE_3 = ((0, 1), (1, 0), (2, 0), (0, 2), (2, 1), (1, 2))


def _edge_rows(g: Graph, a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Edge indices of the pairs ``{a_i, b_i}`` and which column holds ``a_i``."""
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    keys = g.edges[:, 0] * (g.n + 1) + g.edges[:, 1]
    rows = np.searchsorted(keys, lo * (g.n + 1) + hi)
    return rows, (a != lo).astype(np.int64)


def _from_arcs(g: Graph, k: int, tail: np.ndarray, head: np.ndarray,
               tail_color, head_color) -> IncidenceColoring:
    """Colour incidence ``(tail, e)`` and ``(head, e)`` for the oriented edges ``tail -> head``."""
    colors = np.full((g.m, 2), -1, dtype=np.int64)
    rows, side = _edge_rows(g, tail, head)
    colors[rows, side] = tail_color
    colors[rows, 1 - side] = head_color
    return IncidenceColoring(g, k, colors)


def _checked(g: Graph, coloring: IncidenceColoring, d: int, method: str,
             optimal: bool = True) -> DefectiveColoringResult:
    report = check_defective(g, coloring, d)
    if not report.valid:
        raise VerificationFailure(f"{method} produced an invalid coloring: {report.violations[:3]}")
    return DefectiveColoringResult(coloring, d, coloring.k, method, optimal)


def _empty(g: Graph, d: int) -> DefectiveColoringResult:
    return DefectiveColoringResult(IncidenceColoring(g, 0, np.zeros((0, 2))), d, 0, "empty")


def _matching(g: Graph, d: int) -> DefectiveColoringResult:
    colors = np.tile([0, 1], (g.m, 1))
    return _checked(g, IncidenceColoring(g, 2, colors), d, "matching")


def orient_paths_and_cycles(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Orient every component of a graph with maximum degree <= 2 as a directed walk."""
    if g.max_degree > 2:
        raise UnsupportedGraphError("graph has a vertex of degree above 2")
    adj = g.adj
    seen = bytearray(g.n + 1)
    tails, heads = [], []
    starts = [v for v in g.vertices() if len(adj[v]) == 1] + list(g.vertices())
    for s in starts:
        if seen[s] or not adj[s]:
            continue
        seen[s] = 1
        prev, cur = 0, s
        while True:
            nb = adj[cur]
            if nb[0] != prev:
                nxt = nb[0]
            elif len(nb) == 2:
                nxt = nb[1]
            else:
                break
            tails.append(cur)
            heads.append(nxt)
            if seen[nxt]:       # closed a cycle back at s
                break
            seen[nxt] = 1
            prev, cur = cur, nxt
    return np.array(tails, dtype=np.int64), np.array(heads, dtype=np.int64)


def color_paths_and_cycles(g: Graph, d: int = 1, method: str = "paths-cycles") -> DefectiveColoringResult:
    """Two colours: tail incidences 0, head incidences 1 along a walk orientation."""
    if g.m == 0:
        return _empty(g, d)
    tail, head = orient_paths_and_cycles(g)
    return _checked(g, _from_arcs(g, 2, tail, head, 0, 1), d, method)


def color_path(g: Graph, d: int = 1) -> DefectiveColoringResult:
    cls = classify(g)
    if cls.tag not in ("Path", "MatchingK2s") or (cls.tag == "MatchingK2s" and g.n != 2):
        raise UnsupportedGraphError(f"not a path: {cls}")
    return color_paths_and_cycles(g, d, "path")


def color_cycle(g: Graph, d: int = 1) -> DefectiveColoringResult:
    if classify(g).tag != "Cycle":
        raise UnsupportedGraphError("not a cycle")
    return color_paths_and_cycles(g, d, "cycle")


def _path_sums(parent: np.ndarray, weight: np.ndarray, root: int) -> tuple[np.ndarray, np.ndarray]:
    """Sum of ``weight`` and number of edges on each vertex's path to ``root`` (pointer jumping)."""
    anc = parent.copy()
    total = weight.copy()
    depth = np.ones_like(weight)
    total[root] = depth[root] = 0
    while np.any(anc != root):
        total += total[anc]
        depth += depth[anc]
        anc = anc[anc]
    return total, depth


def color_tree(g: Graph, d: int = 1) -> DefectiveColoringResult:
    """Delta colours via a breadth-first ordered rooting at a maximum-degree vertex.

    The root's i-th child ``u`` gets ``phi(r, ru) = i-1`` and ``phi(u, ru) = i``;
    below, the i-th child ``w`` of ``u`` (parent ``v``) gets
    ``phi(u, uw) = phi(u, uv) + i`` and ``phi(w, uw) = phi(v, uv) + i``, all mod Delta.
    Unrolled, both colours on the edge above ``w`` equal the sum ``S`` of child
    indices along the path from the root to ``w``, less one on the parent side
    at odd depth and on the child side at even depth.  Every weak set ``A_u``
    ends up rainbow.
    """
    if g.m != g.n - 1 or not g.is_connected():
        raise UnsupportedGraphError("not a tree")
    if g.m == 0:
        return _empty(g, d)
    delta = g.max_degree
    if delta == 1:
        return _matching(g, d)
    root = int(np.argmax(g.degrees))
    e = g.edges
    sym = csr_matrix((np.ones(2 * g.m), (np.r_[e[:, 0], e[:, 1]], np.r_[e[:, 1], e[:, 0]])),
                     shape=(g.n + 1, g.n + 1))
    order, pred = breadth_first_order(sym, root, directed=False, return_predecessors=True)
    children = order[1:].astype(np.int64)
    parents = pred[children].astype(np.int64)
    by_parent = np.lexsort((children, parents))
    sp, sc = parents[by_parent], children[by_parent]
    first = np.r_[True, sp[1:] != sp[:-1]]
    group_start = np.maximum.accumulate(np.where(first, np.arange(len(sp)), 0))
    rank = np.zeros(g.n + 1, dtype=np.int64)
    rank[sc] = np.arange(len(sp)) - group_start + 1      # 1-based child index

    parent = np.full(g.n + 1, root, dtype=np.int64)
    parent[children] = parents
    total, depth = _path_sums(parent, rank, root)
    odd = depth % 2
    down = (total - odd) % delta           # phi(parent(w), parent(w) w), indexed by w
    up = (total - (1 - odd)) % delta       # phi(w, parent(w) w)
    a, b = e[:, 0], e[:, 1]
    b_below = parent[b] == a
    child = np.where(b_below, b, a)
    colors = np.where(b_below[:, None], np.stack([down[child], up[child]], axis=1),
                      np.stack([up[child], down[child]], axis=1))
    return _checked(g, IncidenceColoring(g, delta, colors), d, "tree")


def color_complete_bipartite(g: Graph, d: int = 1, parts=None) -> DefectiveColoringResult:
    """``phi(v_i, u_j v_i) = i+j-1`` and ``phi(u_j, u_j v_i) = i+j`` (mod m), ``m`` the larger part."""
    if parts is None:
        cls = classify(g)
        if cls.tag == "CompleteBipartite":
            parts = cls.witness["parts"]
        else:
            bp = g.bipartition() if g.is_connected() else None
            if bp is None or len(bp[0]) * len(bp[1]) != g.m:
                raise UnsupportedGraphError(f"not complete bipartite: {cls}")
            parts = bp
    big, small = sorted(parts[0]), sorted(parts[1])
    if len(big) < len(small):
        big, small = small, big
    m = len(big)
    if m == 1:
        return _matching(g, d)
    u = np.repeat(np.array(big), len(small))
    v = np.tile(np.array(small), m)
    j = np.repeat(np.arange(1, m + 1), len(small))
    i = np.tile(np.arange(1, len(small) + 1), m)
    coloring = _from_arcs(g, m, v, u, (i + j - 1) % m, (i + j) % m)
    return _checked(g, coloring, d, "complete-bipartite")


def color_complete(n: int, d: int = 1) -> DefectiveColoringResult:
    """Optimal coloring of ``K_n``: ``n-1`` colours except ``n = 2`` and ``(n, d) = (4, 1)``.

    For ``n`` other than 2 and 4, incidence ``(v_i, v_i v_j)`` takes entry
    ``L(i, j) - 1`` of a zero-diagonal Latin square without principal
    intercalates.
    """
    from .graph import complete

    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    g = complete(n)
    if n == 1:
        return _empty(g, d)
    if n == 2:
        return _matching(g, d)
    if n == 4:
        table = K4_ONE_DEFECTIVE_4 if d == 1 else K4_TWO_DEFECTIVE_3
        k = 4 if d == 1 else 3
        return _checked(g, IncidenceColoring(g, k, np.array(table)), d, "k4-table")
    sq = latin_square_no_principal(n).astype(np.int64)
    a, b = g.edges[:, 0] - 1, g.edges[:, 1] - 1
    colors = np.stack([sq[a, b], sq[b, a]], axis=1) - 1
    return _checked(g, IncidenceColoring(g, n - 1, colors), d, "latin")
