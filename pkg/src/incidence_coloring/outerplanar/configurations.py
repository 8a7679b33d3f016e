"""Unavoidable local configurations of outerplanar graphs and their reductions.

Every outerplanar graph contains one of

* C1 -- a vertex ``u`` of degree at most 1;
* C2 -- an edge ``uv`` with both ends of degree 2;
* C3 -- a triangle ``uvw`` with ``deg u = 2`` and ``deg v = 3``;
* C4 -- triangles ``uvx`` and ``uwy`` sharing ``u``, with ``deg u = 4`` and
  ``deg v = deg w = 2``.

Each configuration is turned into a :class:`ReductionStep`: a smaller graph
plus the incidences that must be coloured (``free``) or may be changed
(``recolorable``) when a coloring of the smaller graph is extended back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..graph import Graph

Incidence = tuple[int, int]

SUBKINDS = ("R1", "R2", "R3", "TRI234", "T1", "T2", "T3", "FALLBACK")


@dataclass(frozen=True)
class Configuration:
    kind: str                       # C1 | C2 | C3 | C4
    roles: Mapping[str, int]
    c4_subkind: str | None = None

    def __str__(self) -> str:
        roles = ", ".join(f"{k}={v}" for k, v in self.roles.items())
        extra = f" [{self.c4_subkind}]" if self.c4_subkind else ""
        return f"{self.kind}({roles}){extra}"


@dataclass
class ReductionStep:
    op: str                                  # delete-vertex | delete-edge | delete-vertices | delete-vertices-add-edge
    rule: str                                # one of SUBKINDS
    removed_vertices: tuple[int, ...] = ()
    removed_edges: tuple[tuple[int, int], ...] = ()
    added_edges: tuple[tuple[int, int], ...] = ()
    free: tuple[Incidence, ...] = ()
    recolorable: tuple[Incidence, ...] = ()
    core: tuple[int, ...] = field(default=())


def _both(a: int, b: int) -> tuple[Incidence, Incidence]:
    return (a, b), (b, a)


# ---------------------------------------------------------------------------
# Matching on a mutable adjacency (vertex -> set of neighbours)
# ---------------------------------------------------------------------------

def match_at(adj, u: int) -> Configuration | None:
    """The first configuration in order C1..C4 that has ``u`` in the role ``u``."""
    nu = adj[u]
    du = len(nu)
    if du <= 1:
        return Configuration("C1", {"u": u})
    if du == 2:
        a, b = sorted(nu)
        for v in (a, b):
            if len(adj[v]) == 2:
                return Configuration("C2", {"u": u, "v": v})
        if b in adj[a]:
            for v, w in ((a, b), (b, a)):
                if len(adj[v]) == 3:
                    return Configuration("C3", {"u": u, "v": v, "w": w})
        return None
    if du == 4:
        arms = []
        for v in sorted(nu):
            if len(adj[v]) == 2:
                x = next(z for z in adj[v] if z != u)
                if x in nu:
                    arms.append((v, x))
        for i in range(len(arms)):
            for j in range(i + 1, len(arms)):
                (v, x), (w, y) = arms[i], arms[j]
                if len({v, w, x, y}) == 4:
                    return Configuration("C4", {"u": u, "v": v, "w": w, "x": x, "y": y})
    return None


def _adjacency(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.adj[v]) for v in g.vertices()}


def find_configuration(g: Graph) -> Configuration | None:
    """First match in order C1, C2, C3, C4, each scanned by ascending vertex id.

    ``None`` certifies that ``g`` is not outerplanar.
    """
    adj = _adjacency(g)
    for kind in ("C1", "C2", "C3", "C4"):
        for u in g.vertices():
            conf = match_at(adj, u)
            if conf is not None and conf.kind == kind:
                return conf
    return None


# ---------------------------------------------------------------------------
# C4 dispatch
# ---------------------------------------------------------------------------

def _c4_side_rule(adj, big_delta: int, x: int) -> str | None:
    """Rule for the arm ``u-v-x`` of a C4 when ``big_delta = 5``."""
    dx = len(adj[x])
    if dx <= big_delta - 2:
        return "R2"
    if dx == big_delta - 1:
        return "R3"
    return None


def classify_c4(g: Graph | dict, conf: Configuration, big_delta: int) -> str:
    """Pick the reduction rule for a C4 configuration.

    ======  =====================================================  ========
    Delta   situation                                              rule
    ======  =====================================================  ========
    >= 6    always (``deg u = 4 <= Delta - 2``)                    R2
    5       a partner ``x`` or ``y`` of degree <= 3 / exactly 4    R2 / R3
    5       both partners of degree 5                              T3
    4       a partner of degree <= 2 / exactly 3                   R2 / TRI234
    4       both partners of degree 4, ``xy`` not an edge          T1
    4       both partners of degree 4, ``xy`` an edge              T2
    ======  =====================================================  ========
    """
    if conf.kind != "C4" or set(conf.roles) != {"u", "v", "w", "x", "y"}:
        raise ValueError(f"not a C4 configuration: {conf}")
    if big_delta < 4:
        raise ValueError("C4 dispatch needs big_delta >= 4")
    adj = _adjacency(g) if isinstance(g, Graph) else g
    r = conf.roles
    u, v, w, x, y = r["u"], r["v"], r["w"], r["x"], r["y"]
    if (len(adj[u]) != 4 or len(adj[v]) != 2 or len(adj[w]) != 2
            or not {v, x, w, y} <= adj[u] or x not in adj[v] or y not in adj[w]):
        raise ValueError(f"roles do not form a C4: {conf}")
    if big_delta >= 6:
        return "R2"
    dx, dy = len(adj[x]), len(adj[y])
    if big_delta == 5:
        rules = {_c4_side_rule(adj, 5, x), _c4_side_rule(adj, 5, y)}
        return "R2" if "R2" in rules else "R3" if "R3" in rules else "T3"
    if min(dx, dy) <= 2:
        return "R2"
    if 3 in (dx, dy):
        return "TRI234"
    if dx == dy == 4:
        return "T2" if y in adj[x] else "T1"
    return "FALLBACK"


# ---------------------------------------------------------------------------
# Building reduction steps
# ---------------------------------------------------------------------------

def _delete_edge(rule: str, a: int, b: int, recolorable=(), core=()) -> ReductionStep:
    return ReductionStep("delete-edge", rule, removed_edges=((a, b),), free=_both(a, b),
                         recolorable=tuple(recolorable), core=tuple(core) or (a, b))


def _r2(u: int, v: int) -> ReductionStep:
    """``deg u = 2`` and ``deg v <= big_delta - 2``: delete ``uv``."""
    return _delete_edge("R2", u, v)


def _r3(u: int, v: int, w: int) -> ReductionStep:
    """``deg u = 2`` with both neighbours of degree ``big_delta - 1``: delete ``uw``.

    The colours on ``uv`` may have to be swapped out during the extension.
    """
    return _delete_edge("R3", u, w, recolorable=_both(u, v), core=(u, v, w))


def reduction_for(adj, conf: Configuration, big_delta: int) -> ReductionStep:
    """The reduction prescribed for ``conf`` when building a conditional coloring."""
    r = conf.roles
    u = r["u"]
    if conf.kind == "C1":
        nbrs = tuple(adj[u])
        edges = tuple((u, z) for z in nbrs)
        return ReductionStep("delete-vertex", "R1", removed_vertices=(u,), removed_edges=edges,
                             free=tuple(i for z in nbrs for i in _both(u, z)), core=(u,) + nbrs)
    if conf.kind == "C2":
        return _r2(u, r["v"])
    if conf.kind == "C3":
        v, w = r["v"], r["w"]
        if big_delta >= 5:
            return _r2(u, v)
        dw = len(adj[w])
        if dw <= big_delta - 2:
            return _r2(u, w)
        if dw == big_delta - 1:
            return _r3(u, v, w)
        # triangle with degrees 2, 3, 4: delete the edge between the degree-2 and degree-3 vertex
        return _delete_edge("TRI234", u, v, core=(u, v, w))
    rule = classify_c4(adj, conf, big_delta)
    v, w, x, y = r["v"], r["w"], r["x"], r["y"]
    core = (u, v, w, x, y)
    if big_delta >= 6:                     # deg u = 4 <= big_delta - 2
        return _r2(v, u)
    if rule in ("R2", "R3"):
        for a, b in ((v, x), (w, y)):
            if rule == "R2" and len(adj[b]) <= big_delta - 2:
                return _r2(a, b)
            if rule == "R3" and len(adj[b]) == big_delta - 1:
                return _r3(a, u, b)
    if rule == "TRI234":
        a, b = (v, x) if len(adj[x]) == 3 else (w, y)
        # triangle u-a-b: deg a = 2, deg b = 3, deg u = 4
        return _delete_edge("TRI234", a, b, core=core)
    if rule == "T1":
        edges = ((u, v), (u, w), (u, x), (u, y), (v, x), (w, y))
        return ReductionStep("delete-vertices-add-edge", "T1", removed_vertices=(v, w),
                             removed_edges=edges, added_edges=((x, y),),
                             free=tuple(i for a, b in edges for i in _both(a, b)), core=core)
    if rule == "T2":
        edges = ((u, v), (u, w), (u, x), (u, y), (v, x), (w, y))
        return ReductionStep("delete-vertices", "T2", removed_vertices=(u, v, w), removed_edges=edges,
                             free=tuple(i for a, b in edges for i in _both(a, b)),
                             recolorable=_both(x, y), core=core)
    if rule == "T3":
        # the strong incidence of u toward the other degree-2 arm may take a fresh colour
        return _delete_edge("T3", u, v, recolorable=((u, w),), core=core)
    return _delete_edge("FALLBACK", u, v, core=core)
