"""Local backtracking searches that extend a partial incidence coloring.

Both searches work on a mutable working graph ``adj`` (vertex -> set of
neighbours) and a colour dictionary ``col`` keyed by incidence ``(v, w)``
(strong for ``v``, on edge ``vw``).  They (re)assign the listed incidences
in place and leave every other entry of ``col`` untouched.  On failure the
listed incidences are left uncoloured.
"""
from __future__ import annotations

from typing import Iterable

from ..coloring import IncidenceColoring
from ..graph import Graph

Incidence = tuple[int, int]


def search_conditional(adj, col: dict, big_delta: int, incs: list[Incidence]) -> bool:
    """Colour ``incs`` so that conditions (i)-(iv) hold at all their endpoints.

    Colours are tried lowest first, incidences in the given order.  Condition
    (iv) is pruned as soon as the colours still missing at a vertex outnumber
    its unassigned incidences, which at the last one means "all present".
    """
    for inc in incs:
        col.pop(inc, None)
    todo: dict[int, int] = {}
    for p, q in incs:
        todo[p] = todo.get(p, 0) + 1
        todo[q] = todo.get(q, 0) + 1
    needs_all = {v for v in todo if len(adj[v]) >= big_delta - 1}
    palette = range(big_delta)

    def seen(v: int) -> set[int]:
        got = set()
        for w in adj[v]:
            c = col.get((v, w))
            if c is not None:
                got.add(c)
            c = col.get((w, v))
            if c is not None:
                got.add(c)
        return got

    def feasible(v: int) -> bool:
        return v not in needs_all or big_delta - len(seen(v)) <= todo[v]

    def fits(p: int, q: int, c: int) -> bool:
        if col.get((q, p)) == c:                        # (i)
            return False
        for w in adj[p]:                                # (iii) strong at p
            if w != q and col.get((p, w)) == c:
                return False
        for w in adj[q]:                                # (ii) weak at q
            if w != p and col.get((w, q)) == c:
                return False
        return True

    def assign(i: int) -> bool:
        if i == len(incs):
            return True
        p, q = incs[i]
        for c in palette:
            if not fits(p, q, c):
                continue
            col[(p, q)] = c
            todo[p] -= 1
            todo[q] -= 1
            if feasible(p) and feasible(q) and assign(i + 1):
                return True
            todo[p] += 1
            todo[q] += 1
            del col[(p, q)]
        return False

    return assign(0)


def search_defective(adj, col: dict, k: int, d: int, incs: list[Incidence]) -> bool:
    """Colour ``incs`` so that conditions (a), (b), (c) with defect ``d`` hold locally.

    A condition (c) violation needs a strong incidence and ``d + 1`` weak ones
    of one colour at one vertex; whichever of them is assigned last detects it.
    """
    for inc in incs:
        col.pop(inc, None)

    def weak_count(v: int, c: int) -> int:
        return sum(1 for w in adj[v] if col.get((w, v)) == c)

    def fits(p: int, q: int, c: int) -> bool:
        if col.get((q, p)) == c:                                        # (b)
            return False
        if any(col.get((p, w)) == c for w in adj[p] if w != q):         # (a)
            return False
        if weak_count(p, c) > d:                                        # (c) at p
            return False
        if any(col.get((q, w)) == c for w in adj[q]) and weak_count(q, c) + 1 > d:
            return False                                                # (c) at q
        return True

    def assign(i: int) -> bool:
        if i == len(incs):
            return True
        p, q = incs[i]
        for c in range(k):
            if fits(p, q, c):
                col[(p, q)] = c
                if assign(i + 1):
                    return True
                del col[(p, q)]
        return False

    return assign(0)


def extend_local(g: Graph, partial: dict[Incidence, int] | IncidenceColoring,
                 free: Iterable[Incidence], recolorable: Iterable[Incidence],
                 big_delta: int) -> IncidenceColoring | None:
    """Extend ``partial`` to a conditional incidence ``big_delta``-coloring of ``g``.

    ``partial`` must colour every incidence of ``g`` outside ``free``; the
    incidences in ``recolorable`` may change.  Returns ``None`` when the
    search is exhausted.
    """
    colors = dict(partial.items()) if isinstance(partial, IncidenceColoring) else dict(partial)
    free = [tuple(x) for x in free]
    clash = [inc for inc in free if inc in colors]
    if clash:
        raise ValueError(f"free incidences already coloured: {clash[:3]}")
    incs = sorted(set(free) | {tuple(x) for x in recolorable})
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    if not search_conditional(adj, colors, big_delta, incs):
        return None
    return IncidenceColoring.from_mapping(g, big_delta, colors)
