"""Checkers for d-defective and conditional incidence colorings.

Condition letters in reports:

``a``    two strong incidences of a vertex share a colour
``b``    the two incidences of an edge share a colour
``c``    a strong colour of ``u`` occurs more than ``d`` times among ``A_u``
``i``-``iv``  the four conditions of a conditional incidence Delta-coloring
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coloring import IncidenceColoring
from .errors import ColoringMismatchError
from .graph import Graph

MAX_WITNESSES = 100


@dataclass
class Violation:
    condition: str
    vertex: int | None
    witness: list[tuple[int, int, int]]
    multiplicity: int

    def to_doc(self) -> dict:
        return {"condition": self.condition, "vertex": self.vertex,
                "witness": [list(w) for w in self.witness], "multiplicity": self.multiplicity}


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)
    truncated: dict[str, int] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.violations

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def to_doc(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_doc() for v in self.violations],
                "truncated": self.truncated}


class _Incidences:
    """Flat arrays over all ``2m`` incidences of a coloured graph."""

    def __init__(self, g: Graph, c: IncidenceColoring):
        if c.graph is not g and c.graph != g:
            raise ColoringMismatchError("coloring was built for a different graph")
        e = g.edges
        self.g = g
        self.k = max(c.k, 1)
        self.owner = np.concatenate([e[:, 0], e[:, 1]])       # the vertex v of (v, e)
        self.other = np.concatenate([e[:, 1], e[:, 0]])       # the vertex it is weak for
        self.col = np.concatenate([c.colors[:, 0], c.colors[:, 1]])
        self.strong_key = self.owner * self.k + self.col
        self.weak_key = self.other * self.k + self.col

    def label(self, idx: int) -> tuple[int, int, int]:
        v, w = int(self.owner[idx]), int(self.other[idx])
        return (v, min(v, w), max(v, w))


def _duplicates(keys: np.ndarray) -> list[np.ndarray]:
    """Index groups (size >= 2) of equal keys."""
    if len(keys) == 0:
        return []
    order = np.argsort(keys, kind="stable")
    sk = keys[order]
    starts = np.flatnonzero(np.concatenate([[True], sk[1:] != sk[:-1]]))
    sizes = np.diff(np.concatenate([starts, [len(sk)]]))
    keep = sizes > 1
    return [order[s:s + z] for s, z in zip(starts[keep].tolist(), sizes[keep].tolist())]


def _add(report: VerificationReport, cond: str, violation: Violation) -> None:
    count = sum(1 for v in report.violations if v.condition == cond)
    if count >= MAX_WITNESSES:
        report.truncated[cond] = report.truncated.get(cond, 0) + 1
        return
    report.violations.append(violation)


def _check_distinct(report, inc: _Incidences, keys, cond, vertex_of) -> None:
    for grp in _duplicates(keys):
        v = int(vertex_of[grp[0]])
        _add(report, cond, Violation(cond, v, [inc.label(i) for i in grp.tolist()], len(grp)))


def _check_edges(report, inc: _Incidences, cond: str) -> None:
    m = inc.g.m
    clash = np.flatnonzero(inc.col[:m] == inc.col[m:])
    for i in clash.tolist():
        _add(report, cond, Violation(cond, None, [inc.label(i), inc.label(i + m)], 2))


def _strong_in_weak_counts(inc: _Incidences) -> np.ndarray:
    """For every strong incidence, how often its (vertex, colour) occurs among weak ones."""
    span = (inc.g.n + 1) * inc.k
    if span <= 4 * len(inc.weak_key) + 1_000_000:
        return np.bincount(inc.weak_key, minlength=span)[inc.strong_key]
    wk, wc = np.unique(inc.weak_key, return_counts=True)
    pos = np.clip(np.searchsorted(wk, inc.strong_key), 0, len(wk) - 1)
    return np.where(wk[pos] == inc.strong_key, wc[pos], 0)


def check_defective(g: Graph, c: IncidenceColoring, d: int) -> VerificationReport:
    """Check conditions (a), (b), (c) of a d-defective incidence coloring."""
    if d < 0:
        raise ValueError("defect bound d must be non-negative")
    inc = _Incidences(g, c)
    report = VerificationReport()
    _check_distinct(report, inc, inc.strong_key, "a", inc.owner)
    _check_edges(report, inc, "b")
    if g.m:
        counts = _strong_in_weak_counts(inc)
        seen = set()
        for i in np.flatnonzero(counts > d).tolist():
            key = int(inc.strong_key[i])
            if key in seen:
                continue
            seen.add(key)
            u = int(inc.owner[i])
            witness = np.flatnonzero(inc.weak_key == key).tolist()
            _add(report, "c", Violation("c", u, [inc.label(j) for j in witness], int(counts[i])))
    return report


def defect_of(g: Graph, c: IncidenceColoring) -> int | None:
    """Least d for which ``c`` is d-defective; ``None`` when (a) or (b) fails."""
    inc = _Incidences(g, c)
    if _duplicates(inc.strong_key) or np.any(inc.col[:g.m] == inc.col[g.m:]):
        return None
    if g.m == 0:
        return 0
    counts = _strong_in_weak_counts(inc)
    return int(counts.max())


def check_conditional(g: Graph, c: IncidenceColoring, big_delta: int) -> VerificationReport:
    """Check conditions (i)-(iv) of a conditional incidence ``big_delta``-coloring."""
    if big_delta < 1:
        raise ValueError("big_delta must be positive")
    if c.k != big_delta:
        raise ValueError(f"palette size {c.k} differs from big_delta={big_delta}")
    if g.max_degree > big_delta:
        raise ValueError(f"max degree {g.max_degree} exceeds big_delta={big_delta}")
    inc = _Incidences(g, c)
    report = VerificationReport()
    _check_edges(report, inc, "i")
    _check_distinct(report, inc, inc.weak_key, "ii", inc.other)
    _check_distinct(report, inc, inc.strong_key, "iii", inc.owner)
    full = np.flatnonzero(g.degrees >= big_delta - 1)
    full = full[full >= 1]
    if len(full):
        present = np.unique(np.concatenate([inc.strong_key, inc.weak_key]))
        per_vertex = np.bincount(present // inc.k, minlength=g.n + 1)
        for u in full[per_vertex[full] < big_delta].tolist():
            have = sorted(set((present[present // inc.k == u] % inc.k).tolist()))
            witness = [inc.label(i) for i in np.flatnonzero((inc.owner == u) | (inc.other == u)).tolist()]
            _add(report, "iv", Violation("iv", u, witness, len(have)))
    return report
