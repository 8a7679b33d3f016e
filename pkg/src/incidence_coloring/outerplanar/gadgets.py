"""The two degree-4 gadgets whose extension is settled by explicit colour tables.

Both gadgets live around a vertex ``u`` of degree 4 with neighbours
``v, w, x, y``, where ``v`` and ``w`` have degree 2 and close the triangles
``uvx`` and ``uwy``; ``x`` and ``y`` have degree 4.

* T1: ``xy`` is not an edge; ``x`` has two further neighbours ``x1, x2`` and
  ``y`` has ``y1, y2``.  Twelve incidences (on ``uv, uw, ux, uy, vx, wy``)
  are coloured ``t1..t12``; the boundary colours are
  ``a, b = phi(x, x x1), phi(x, x x2)``, ``c, d = phi(x1, x x1), phi(x2, x x2)``,
  ``e, f = phi(y, y y1), phi(y, y y2)``, ``g, h = phi(y1, y y1), phi(y2, y y2)``.
* T2: ``xy`` is an edge; ``x`` and ``y`` have one further neighbour each,
  ``x1`` and ``y1``.  Fourteen incidences (the T1 ones plus both on ``xy``)
  are coloured ``t1..t14`` against the boundary
  ``phi(x, x x1) = 1``, ``phi(x1, x x1) = 2``, ``phi(y, y y1) = c``,
  ``phi(y1, y y1) = d``.

Colours in this module are ``1..4`` to match the tables.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from ..coloring import IncidenceColoring
from ..graph import Graph

COLORS = (1, 2, 3, 4)

# Incidence carrying t_i, as (strong vertex, other endpoint) in role names.
# Recovered from the constraint sets below; the test-suite checks that the
# pairwise constraints are exactly the conflicts between these incidences.
T1_INCIDENCES = (
    ("v", "x"), ("v", "u"), ("w", "u"), ("w", "y"), ("x", "v"), ("u", "v"),
    ("u", "w"), ("y", "w"), ("x", "u"), ("u", "x"), ("u", "y"), ("y", "u"),
)
T2_INCIDENCES = T1_INCIDENCES + (("x", "y"), ("y", "x"))

# For each t_i (1-based) the symbols it must differ from: other t's by index,
# boundary colours by letter.
T1_CONSTRAINTS = {
    1: (2, 5, 10, "c", "d"),
    2: (3, 6, 9, 12),
    3: (4, 7, 9, 12),
    4: (8, 11, "g", "h"),
    5: (6, 9, "a", "b"),
    6: (7, 10, 11),
    7: (8, 10, 11),
    8: (12, "e", "f"),
    9: (10, 12, "a", "b"),
    10: (11, "c", "d"),
    11: (12, "g", "h"),
    12: ("e", "f"),
}

T2_VECTORS = {
    (1, 2): (3, 1, 4, 1, 4, 2, 3, 2, 2, 1, 4, 3, 3, 4),
    (1, 3): (3, 1, 4, 1, 4, 3, 2, 3, 3, 1, 4, 2, 2, 4),
    (2, 1): (3, 4, 3, 4, 4, 3, 4, 3, 2, 1, 2, 1, 3, 4),
    (2, 3): (1, 2, 1, 4, 4, 3, 2, 1, 3, 4, 1, 4, 2, 3),
    (3, 2): (1, 3, 1, 4, 2, 4, 2, 1, 4, 3, 1, 2, 3, 4),
    (3, 4): (3, 4, 2, 1, 4, 2, 4, 2, 3, 1, 3, 1, 2, 4),
}

_MIRROR = {"u": "u", "v": "w", "w": "v", "x": "y", "y": "x"}


def _check_range(values) -> None:
    for z in values:
        if z not in COLORS:
            raise ValueError(f"colour {z!r} outside 1..4")


def check_t1(a: int, b: int, c: int, d: int, e: int, f: int, g: int, h: int) -> tuple[int, ...] | None:
    """Colours ``t1..t12`` meeting every T1 constraint, or ``None`` if there are none.

    Each ``t_i`` is constrained only by boundary colours and by ``t_j`` with
    ``j > i``, so assigning ``t12`` first and walking down to ``t1`` checks
    every constraint as soon as both sides are known.
    """
    _check_range((a, b, c, d, e, f, g, h))
    boundary = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h)
    t = [0] * 13

    def forbidden(i: int) -> set[int]:
        return {t[s] if isinstance(s, int) else boundary[s] for s in T1_CONSTRAINTS[i]}

    def assign(i: int) -> bool:
        if i == 0:
            return True
        bad = forbidden(i)
        for col in COLORS:
            if col not in bad:
                t[i] = col
                if assign(i - 1):
                    return True
        t[i] = 0
        return False

    return tuple(t[1:]) if assign(12) else None


def t1_satisfied(t, a, b, c, d, e, f, g, h) -> bool:
    """Direct evaluation of the T1 constraints for a 12-tuple ``t``."""
    boundary = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h)
    for i, syms in T1_CONSTRAINTS.items():
        for s in syms:
            other = t[s - 1] if isinstance(s, int) else boundary[s]
            if t[i - 1] == other:
                return False
    return True


def is_valid_t1_boundary(c, d, e, f, g, h, a=1, b=2) -> bool:
    """Boundary colours that a conditional coloring of the reduced graph can produce."""
    return c not in (a, d) and d != b and g not in (e, h) and f not in (e, h)


def _exceptional(c, d, e, f, g, h, a=1, b=2) -> bool:
    """The four families of boundary tuples excluded by a separate argument."""
    ab, cd, ef, gh = {a, b}, {c, d}, {e, f}, {g, h}
    if ab == ef and len(cd & gh) == 1:
        if not (cd & gh) & ab or not (cd ^ gh) & ab:
            return True
    if cd == gh and len(ab & ef) == 1:
        if not (ab & ef) & cd or not (ab ^ ef) & cd:
            return True
    return False


@dataclass
class InspectionReport:
    enumerated: int = 0
    valid: int = 0
    extendable: int = 0
    non_extendable: list[tuple[int, ...]] = field(default_factory=list)
    residual: list[tuple[int, ...]] = field(default_factory=list)
    elapsed: float = 0.0

    def to_doc(self) -> dict:
        return {
            "enumerated": self.enumerated,
            "valid": self.valid,
            "extendable": self.extendable,
            "non_extendable": [list(r) for r in self.non_extendable],
            "residual": [list(r) for r in self.residual],
            "elapsed": round(self.elapsed, 6),
        }


def _inspect_slice(c: int) -> tuple[int, int, list[tuple[int, ...]]]:
    """Valid and non-extendable boundaries with ``a = 1, b = 2`` and the given ``c``."""
    valid, stuck = 0, []
    for d, e, f, g, h in itertools.product(COLORS, repeat=5):
        if not is_valid_t1_boundary(c, d, e, f, g, h):
            continue
        valid += 1
        if check_t1(1, 2, c, d, e, f, g, h) is None:
            stuck.append((1, 2, c, d, e, f, g, h))
    return 4 ** 5, valid, stuck


def reducibility_inspection(jobs: int = 1) -> InspectionReport:
    """Run ``check_t1`` over every valid boundary with ``a = 1, b = 2``.

    Tuples that cannot be extended are collected, then those in the four
    exceptional families are removed; the remainder is ``residual``.  With
    ``jobs > 1`` the four values of ``c`` are inspected in separate processes;
    the merged report is identical.
    """
    t0 = time.perf_counter()
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(jobs, len(COLORS))) as pool:
            parts = list(pool.map(_inspect_slice, COLORS))
    else:
        parts = [_inspect_slice(c) for c in COLORS]
    report = InspectionReport()
    for enumerated, valid, stuck in parts:
        report.enumerated += enumerated
        report.valid += valid
        report.non_extendable.extend(stuck)
    report.extendable = report.valid - len(report.non_extendable)
    report.residual = [row for row in report.non_extendable if not _exceptional(*row[2:])]
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# T2
# ---------------------------------------------------------------------------

T2_ROLES = {"u": 1, "v": 2, "w": 3, "x": 4, "y": 5, "x1": 6, "y1": 7}


def t2_gadget() -> Graph:
    """The T2 neighbourhood with ``u..y1`` numbered 1..7."""
    r = T2_ROLES
    pairs = [("u", "v"), ("u", "x"), ("u", "w"), ("u", "y"), ("v", "x"), ("w", "y"),
             ("x", "y"), ("x", "x1"), ("y", "y1")]
    return Graph(7, [(r[a], r[b]) for a, b in pairs])


def t2_coloring(c: int, d: int, vector) -> IncidenceColoring:
    """Place ``vector`` (colours 1..4) and the boundary ``(1, 2, c, d)`` in :func:`t2_gadget`."""
    r = T2_ROLES
    mapping = {(r[p], r[q]): z - 1 for (p, q), z in zip(T2_INCIDENCES, vector)}
    mapping.update({(r["x"], r["x1"]): 0, (r["x1"], r["x"]): 1,
                    (r["y"], r["y1"]): c - 1, (r["y1"], r["y"]): d - 1})
    return IncidenceColoring.from_mapping(t2_gadget(), 4, mapping)


def _mirror_positions() -> list[int]:
    index = {inc: i for i, inc in enumerate(T2_INCIDENCES)}
    return [index[(_MIRROR[p], _MIRROR[q])] for p, q in T2_INCIDENCES]


def t2_table(c: int, d: int) -> tuple[int, ...]:
    """Colours ``t1..t14`` for the T2 boundary ``(1, 2, c, d)``.

    The six tabulated cases are used directly; any other ``(c, d)`` is first
    brought to one of them by renaming colours (keeping 1 and 2 fixed), or by
    mirroring the gadget (``x <-> y``, ``v <-> w``) and renaming so that the
    new ``x``-boundary reads ``(1, 2)``.
    """
    _check_range((c, d))
    if c == d:
        raise ValueError("c and d colour the two ends of one edge and must differ")
    for perm in itertools.permutations(COLORS):
        pi = dict(zip(COLORS, perm))
        if pi[1] == 1 and pi[2] == 2 and (pi[c], pi[d]) in T2_VECTORS:
            inv = {v: k for k, v in pi.items()}
            return tuple(inv[z] for z in T2_VECTORS[(pi[c], pi[d])])
    mirror = _mirror_positions()
    for perm in itertools.permutations(COLORS):
        sigma = dict(zip(COLORS, perm))
        if sigma[c] == 1 and sigma[d] == 2 and (sigma[1], sigma[2]) in T2_VECTORS:
            inv = {v: k for k, v in sigma.items()}
            vec = T2_VECTORS[(sigma[1], sigma[2])]
            return tuple(inv[vec[mirror[i]]] for i in range(14))
    raise ValueError(f"no tabulated T2 case reaches (c, d) = ({c}, {d})")  # pragma: no cover
