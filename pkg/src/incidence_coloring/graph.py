"""Simple undirected graphs, incidences, edge-list I/O, generators and classification.

Vertices are numbered ``1..n``.  Edges are stored canonically as ``(min, max)``
pairs in lexicographic order, so edge ``i`` of a graph is a stable handle that
colorings can be aligned against.  An incidence ``(v, e)`` is written as the
ordered pair ``(v, w)`` where ``e = {v, w}``: it is a strong incidence of ``v``
and a weak incidence of ``w``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import GraphFormatError


class Graph:
    """Immutable simple graph on vertices ``1..n``."""

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] | np.ndarray = ()):
        if n < 0:
            raise GraphFormatError(f"vertex count must be non-negative, got {n}")
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphFormatError("edges must be pairs of vertex ids")
        if np.any(arr < 1) or np.any(arr > n):
            bad = arr[np.any((arr < 1) | (arr > n), axis=1)][0]
            raise GraphFormatError(f"vertex id out of range 1..{n} in edge {tuple(bad.tolist())}")
        if np.any(arr[:, 0] == arr[:, 1]):
            bad = arr[arr[:, 0] == arr[:, 1]][0]
            raise GraphFormatError(f"self-loop at vertex {int(bad[0])}")
        canon = np.sort(arr, axis=1)
        order = np.lexsort((canon[:, 1], canon[:, 0]))
        canon = canon[order]
        if len(canon) > 1:
            dup = np.all(canon[1:] == canon[:-1], axis=1)
            if dup.any():
                bad = canon[1:][dup][0]
                raise GraphFormatError(f"duplicate edge {tuple(bad.tolist())}")
        canon.setflags(write=False)
        self.n = int(n)
        self.edges = canon

    # -- basic views -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex, indexed by vertex id (slot 0 unused)."""
        deg = np.bincount(self.edges.ravel(), minlength=self.n + 1)
        deg.setflags(write=False)
        return deg

    @cached_property
    def adj(self) -> list[tuple[int, ...]]:
        """Sorted neighbour tuples indexed by vertex id (slot 0 is empty)."""
        if self.m == 0:
            return [()] * (self.n + 1)
        src = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        dst = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        order = np.lexsort((dst, src))
        dst = dst[order].tolist()
        bounds = np.concatenate([[0], np.cumsum(self.degrees)]).tolist()
        return [tuple(dst[bounds[v]:bounds[v + 1]]) for v in range(self.n + 1)]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(int(a), int(b)): i for i, (a, b) in enumerate(self.edges.tolist())}

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.edges.tolist()]

    # -- incidences ----------------------------------------------------------

    def incidences(self) -> Iterator[tuple[int, int]]:
        """All incidences as ``(vertex, other_endpoint)``, in canonical order."""
        for a, b in self.edges.tolist():
            yield (a, b)
            yield (b, a)

    def strong(self, u: int) -> list[tuple[int, int]]:
        """The strong incidences ``I_u``."""
        return [(u, w) for w in self.adj[u]]

    def weak(self, u: int) -> list[tuple[int, int]]:
        """The weak incidences ``A_u``."""
        return [(w, u) for w in self.adj[u]]

    # -- derived graphs --------------------------------------------------------

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        if self.m < self.n - 1:
            return False
        e = self.edges - 1
        sym = csr_matrix((np.ones(self.m, dtype=np.int8), (e[:, 0], e[:, 1])), shape=(self.n, self.n))
        count, _ = connected_components(sym, directed=False)
        return count == 1

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        """Two colour classes of a connected bipartite graph, else ``None``."""
        side = [-1] * (self.n + 1)
        adj = self.adj
        for s in self.vertices():
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return None
        left = [v for v in self.vertices() if side[v] == 0]
        right = [v for v in self.vertices() if side[v] == 1]
        return left, right

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def load_graph(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Errors name the offending (1-based) line.  Blank trailing lines are ignored;
    CRLF line endings are accepted.
    """
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphFormatError("line 1: empty document, expected 'n m'")
    header = lines[0].split()
    if len(header) != 2 or not all(_is_int(t) for t in header):
        raise GraphFormatError(f"line 1: expected 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if n < 0 or m < 0:
        raise GraphFormatError("line 1: n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"line 1: header announces {m} edges but {len(body)} edge lines follow")
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, line in enumerate(body, start=2):
        parts = line.split()
        if len(parts) != 2 or not all(_is_int(t) for t in parts):
            raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 1..{n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def dump_graph(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{a} {b}" for a, b in g.edges.tolist()]
    return "\n".join(rows) + "\n"


def to_dot(g: Graph, coloring=None) -> str:
    """Graphviz export; with a coloring, each edge end is labelled with the colour of its incidence."""
    out = ["graph G {"]
    for v in g.vertices():
        out.append(f"  {v};")
    for i, (a, b) in enumerate(g.edges.tolist()):
        if coloring is None:
            out.append(f"  {a} -- {b};")
        else:
            ca, cb = coloring.colors[i].tolist()
            out.append(f'  {a} -- {b} [taillabel="{ca}", headlabel="{cb}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphClass:
    tag: str
    params: tuple[int, ...] = ()
    witness: dict = field(default_factory=dict, compare=False)

    def __str__(self) -> str:
        if self.params:
            return f"{self.tag}({','.join(map(str, self.params))})"
        return self.tag


def classify(g: Graph) -> GraphClass:
    """Most specific class tag among those the colorers know how to handle."""
    n, m = g.n, g.m
    if m == 0:
        return GraphClass("Empty")
    delta = g.max_degree
    if delta == 1:
        return GraphClass("MatchingK2s")
    connected = g.is_connected()
    degs = g.degrees[1:]
    if connected and delta == 2 and m == n - 1:
        ends = [v for v in g.vertices() if g.degrees[v] == 1]
        return GraphClass("Path", (n,), {"ends": ends})
    if connected and np.all(degs == 2):
        return GraphClass("Cycle", (n,))
    if connected and m == n * (n - 1) // 2:
        return GraphClass("Complete", (n,))
    if connected:
        parts = g.bipartition()
        if parts is not None:
            left, right = parts
            if m == len(left) * len(right):
                if len(left) < len(right):
                    left, right = right, left
                return GraphClass("CompleteBipartite", (len(left), len(right)),
                                  {"parts": (left, right)})
        if m == n - 1:
            return GraphClass("Tree", (n,))
        if delta <= 3:
            return GraphClass("SubcubicCandidate")
    return GraphClass("General")


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def rng_for(seed: int) -> np.random.Generator:
    """Counter-based (Philox) generator, reproducible across platforms."""
    return np.random.Generator(np.random.Philox(key=int(seed)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star(n: int) -> Graph:
    """``K_{1,n}``: hub 1 and leaves ``2..n+1``."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n + 1, [(1, i) for i in range(2, n + 2)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    iu = np.triu_indices(n, k=1)
    return Graph(n, np.stack([iu[0] + 1, iu[1] + 1], axis=1))


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts ``1..m`` and ``m+1..m+n``."""
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs m, n >= 1")
    a, b = np.meshgrid(np.arange(1, m + 1), np.arange(m + 1, m + n + 1), indexing="ij")
    return Graph(m + n, np.stack([a.ravel(), b.ravel()], axis=1))


def fan(n: int) -> Graph:
    """Hub 1 joined to every vertex of the path ``2..n+1``."""
    if n < 1:
        raise ValueError("fan needs n >= 1")
    edges = [(1, i) for i in range(2, n + 2)] + [(i, i + 1) for i in range(2, n + 1)]
    return Graph(n + 1, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Random recursive tree under a random vertex relabelling."""
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    rng = rng_for(seed)
    if n == 1:
        return Graph(1)
    child = np.arange(1, n)
    parent = np.floor(rng.random(n - 1) * child).astype(np.int64)
    label = rng.permutation(n) + 1
    return Graph(n, np.stack([label[parent], label[child]], axis=1))


def _triangulation_chords(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Chords of a uniform random triangulation of the polygon ``1..n``.

    Uses Remy's uniform binary-tree growth and the standard bijection between
    binary trees with ``n-2`` internal nodes and triangulations of an n-gon.
    """
    internal = n - 2
    if internal <= 1:
        return []
    size = 2 * internal + 1
    left = [-1] * size
    right = [-1] * size
    parent = [-1] * size
    root = 0
    nodes = 1
    draws = rng.integers(0, 2 ** 62, size=(internal, 2))
    for step in range(internal):
        pick = int(draws[step, 0] % nodes)
        new_internal, new_leaf = nodes, nodes + 1
        nodes += 2
        p = parent[pick]
        if p < 0:
            root = new_internal
        elif left[p] == pick:
            left[p] = new_internal
        else:
            right[p] = new_internal
        parent[new_internal] = p
        if draws[step, 1] & 1:
            left[new_internal], right[new_internal] = pick, new_leaf
        else:
            left[new_internal], right[new_internal] = new_leaf, pick
        parent[pick] = new_internal
        parent[new_leaf] = new_internal
    # internal-node counts per subtree, post-order
    count = [0] * size
    order = []
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        if left[x] >= 0:
            stack.append(left[x])
            stack.append(right[x])
    for x in reversed(order):
        if left[x] >= 0:
            count[x] = 1 + count[left[x]] + count[right[x]]
    chords = []
    stack = [(root, 1, n)]
    while stack:
        x, i, j = stack.pop()
        if left[x] < 0:
            continue
        k = i + count[left[x]] + 1
        if k - i >= 2:
            chords.append((i, k))
        if j - k >= 2:
            chords.append((k, j))
        stack.append((left[x], i, k))
        stack.append((right[x], k, j))
    return chords


def random_maximal_outerplanar(n: int, seed: int) -> Graph:
    """Cycle ``1..n`` plus the chords of a uniform random triangulation."""
    if n < 3:
        raise ValueError("random_maximal_outerplanar needs n >= 3")
    rng = rng_for(seed)
    ring = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n, ring + _triangulation_chords(n, rng))


def random_outerplanar(n: int, p: float, seed: int, max_degree: int | None = None) -> Graph:
    """Random triangulated polygon with every chord dropped with probability ``p``.

    With ``max_degree`` set, further chords at overfull vertices are dropped
    (in random order) until the bound holds; the outer cycle is always kept.
    """
    if n < 3:
        raise ValueError("random_outerplanar needs n >= 3")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if max_degree is not None and max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    rng = rng_for(seed)
    chords = _triangulation_chords(n, rng)
    keep = rng.random(len(chords)) >= p
    chords = [c for c, k in zip(chords, keep) if k]
    if max_degree is not None and chords:
        deg = [2] * (n + 1)
        for a, b in chords:
            deg[a] += 1
            deg[b] += 1
        kept = []
        for idx in rng.permutation(len(chords)).tolist():
            a, b = chords[idx]
            if deg[a] > max_degree or deg[b] > max_degree:
                deg[a] -= 1
                deg[b] -= 1
            else:
                kept.append((a, b))
        chords = kept
    ring = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n, ring + chords)


GENERATORS = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "random_tree": random_tree,
    "fan": fan,
    "random_maximal_outerplanar": random_maximal_outerplanar,
    "random_outerplanar": random_outerplanar,
}


def generate(kind: str, *args) -> Graph:
    try:
        fn = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown generator {kind!r}; choose from {sorted(GENERATORS)}") from None
    return fn(*args)


def petersen() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def obstruction_graph() -> Graph:
    """Four-cycle ``u x v y`` with chord ``uv`` and pendant edge ``xz``.

    Labels: u=1, x=2, v=3, y=4, z=5.  Outerplanar with maximum degree 3.
    """
    return Graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 5)])


GENERATORS.update(petersen=petersen, obstruction=obstruction_graph)
