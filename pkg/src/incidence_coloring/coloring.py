"""Incidence colorings and their JSON interchange document.

A coloring is stored aligned with a graph's canonical edge array:
``colors[i, 0]`` colours the incidence of the smaller endpoint of edge ``i`` and
``colors[i, 1]`` that of the larger one.  Colours are residues ``0..k-1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

from .errors import ColoringMismatchError
from .graph import Graph


class IncidenceColoring:
    """Total map from the incidences of ``graph`` to colours ``0..k-1``."""

    def __init__(self, graph: Graph, k: int, colors: np.ndarray):
        colors = np.asarray(colors, dtype=np.int64).reshape(graph.m, 2)
        if k < 0:
            raise ValueError("palette size must be non-negative")
        if colors.size and (colors.min() < 0 or colors.max() >= k):
            raise ValueError(f"colours must lie in 0..{k - 1}")
        self.graph = graph
        self.k = int(k)
        self.colors = colors

    @classmethod
    def from_mapping(cls, graph: Graph, k: int, mapping: Mapping[tuple[int, int], int]) -> "IncidenceColoring":
        """Build from ``{(vertex, other_endpoint): colour}``; must match ``graph`` exactly."""
        colors = np.full((graph.m, 2), -1, dtype=np.int64)
        index = graph.edge_index
        extra = []
        for (v, w), c in mapping.items():
            a, b = (v, w) if v < w else (w, v)
            i = index.get((a, b))
            if i is None:
                extra.append((v, w))
                continue
            colors[i, 0 if v == a else 1] = c
        if extra:
            raise ColoringMismatchError(f"extraneous incidences not in the graph: {extra[:5]}")
        missing = np.argwhere(colors < 0)
        if len(missing):
            i, side = missing[0]
            a, b = graph.edges[i].tolist()
            v, w = (a, b) if side == 0 else (b, a)
            raise ColoringMismatchError(
                f"{len(missing)} incidences uncoloured, e.g. ({v}, {{{a},{b}}})")
        return cls(graph, k, colors)

    def __getitem__(self, inc: tuple[int, int]) -> int:
        v, w = inc
        a, b = (v, w) if v < w else (w, v)
        return int(self.colors[self.graph.edge_index[(a, b)], 0 if v == a else 1])

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for (a, b), (ca, cb) in zip(self.graph.edges.tolist(), self.colors.tolist()):
            yield (a, b), ca
            yield (b, a), cb

    def to_mapping(self) -> dict[tuple[int, int], int]:
        return dict(self.items())

    def used_colors(self) -> set[int]:
        return set(np.unique(self.colors).tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceColoring):
            return NotImplemented
        return self.k == other.k and self.graph == other.graph and np.array_equal(self.colors, other.colors)

    def __repr__(self) -> str:
        return f"IncidenceColoring(k={self.k}, incidences={2 * self.graph.m})"


# ---------------------------------------------------------------------------
# JSON document
# ---------------------------------------------------------------------------

def coloring_to_doc(c: IncidenceColoring, one_based: bool = False, **extra) -> dict:
    """``{"k", "n", "incidences": [{"v", "e", "c"}]}``; optional extra keys are merged in."""
    shift = 1 if one_based else 0
    incs = []
    for (a, b), (ca, cb) in zip(c.graph.edges.tolist(), c.colors.tolist()):
        incs.append({"v": a, "e": [a, b], "c": ca + shift})
        incs.append({"v": b, "e": [a, b], "c": cb + shift})
    doc = {"k": c.k, "n": c.graph.n}
    if one_based:
        doc["base"] = 1
    doc.update(extra)
    doc["incidences"] = incs
    return doc


def _parse_incidences(doc: dict) -> tuple[int, int, dict[tuple[int, int], int]]:
    try:
        k = int(doc["k"])
        raw = doc["incidences"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ColoringMismatchError(f"coloring document lacks 'k' or 'incidences': {exc}") from None
    shift = int(doc.get("base", 0))
    mapping: dict[tuple[int, int], int] = {}
    top = 0
    for rec in raw:
        try:
            v = int(rec["v"])
            a, b = (int(x) for x in rec["e"])
            col = int(rec["c"]) - shift
        except (KeyError, TypeError, ValueError) as exc:
            raise ColoringMismatchError(f"malformed incidence record {rec!r}: {exc}") from None
        if v not in (a, b) or a == b:
            raise ColoringMismatchError(f"incidence vertex {v} is not an endpoint of edge {[a, b]}")
        w = b if v == a else a
        if (v, w) in mapping:
            raise ColoringMismatchError(f"incidence ({v}, {{{a},{b}}}) listed twice")
        if not 0 <= col < k:
            raise ColoringMismatchError(f"colour {rec['c']} outside the declared palette of size {k}")
        mapping[(v, w)] = col
        top = max(top, a, b)
    return k, max(top, int(doc.get("n", 0))), mapping


def coloring_from_doc(doc: dict, graph: Graph | None = None) -> IncidenceColoring:
    """Parse a coloring document; without ``graph`` the graph is read off the incidences."""
    k, n, mapping = _parse_incidences(doc)
    if graph is None:
        edges = {(min(v, w), max(v, w)) for v, w in mapping}
        graph = Graph(n, sorted(edges))
    return IncidenceColoring.from_mapping(graph, k, mapping)


def dumps(c: IncidenceColoring, one_based: bool = False, **extra) -> str:
    return json.dumps(coloring_to_doc(c, one_based=one_based, **extra))


def loads(text: str, graph: Graph | None = None) -> IncidenceColoring:
    return coloring_from_doc(json.loads(text), graph)


# ---------------------------------------------------------------------------
# Colorer output
# ---------------------------------------------------------------------------

@dataclass
class DefectiveColoringResult:
    coloring: IncidenceColoring
    d_claimed: int
    k: int
    method: str
    optimal: bool = True
    notes: dict = field(default_factory=dict)

    def to_doc(self, one_based: bool = False) -> dict:
        return coloring_to_doc(self.coloring, one_based=one_based, d=self.d_claimed,
                               method=self.method, optimal=self.optimal)
