"""Route a graph to the colorer for its class."""
from __future__ import annotations

from . import colorers
from .coloring import DefectiveColoringResult
from .errors import UnsupportedGraphError
from .graph import Graph, GraphClass, classify
from .oracle import exact_defective_chromatic, find_coloring_exhaustive
from .outerplanar import color_outerplanar

ORACLE_MAX_INCIDENCES = 16


def _by_oracle(g: Graph, d: int) -> DefectiveColoringResult:
    k = exact_defective_chromatic(g, d, k_max=2 * g.m)
    found, _ = find_coloring_exhaustive(g, d, k)
    return colorers._checked(g, found, d, "oracle")


def color(g: Graph, d: int = 1, cls: GraphClass | None = None) -> DefectiveColoringResult:
    """A verified d-defective incidence coloring with the optimal number of colours.

    Special classes use their closed-form constructions; everything else goes
    through the outerplanar reductions, and small leftovers (at most 16
    incidences) through exhaustive search.  ``result.optimal`` is ``False``
    only when optimality could not be established.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    cls = classify(g) if cls is None else cls
    tag = cls.tag
    if tag == "Empty":
        return colorers._empty(g, d)
    if tag == "MatchingK2s":
        return colorers._matching(g, d)
    if tag == "Path":
        return colorers.color_path(g, d)
    if tag == "Cycle":
        return colorers.color_cycle(g, d)
    if tag == "Complete":
        return colorers.color_complete(g.n, d)
    if tag == "CompleteBipartite":
        return colorers.color_complete_bipartite(g, d, cls.witness.get("parts"))
    if tag == "Tree":
        return colorers.color_tree(g, d)
    try:
        return color_outerplanar(g, d)
    except UnsupportedGraphError:
        if 2 * g.m <= ORACLE_MAX_INCIDENCES:
            return _by_oracle(g, d)
        raise UnsupportedGraphError(
            f"{cls.tag} graph is neither of a special class nor reducible as an outerplanar graph, "
            f"and has more than {ORACLE_MAX_INCIDENCES} incidences for exhaustive search") from None
