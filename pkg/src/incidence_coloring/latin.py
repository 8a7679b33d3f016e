"""Latin squares without principal intercalates.

Squares are dense numpy arrays over symbols ``0..n-1``.  Row and column
indices in the public API are 0-based; the doubling construction is written
with 1-based indices internally to keep its five cases readable.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import LatinSquareError

BASE8 = np.array([
    [0, 1, 2, 3, 4, 5, 6, 7],
    [2, 0, 7, 4, 5, 3, 1, 6],
    [3, 6, 0, 7, 2, 1, 4, 5],
    [4, 5, 6, 0, 3, 2, 7, 1],
    [7, 4, 5, 1, 0, 6, 3, 2],
    [1, 2, 4, 6, 7, 0, 5, 3],
    [5, 3, 1, 2, 6, 7, 0, 4],
    [6, 7, 3, 5, 1, 4, 2, 0],
], dtype=np.uint8)
BASE8.setflags(write=False)


@dataclass(frozen=True)
class Intercalate:
    rows: tuple[int, int]
    cols: tuple[int, int]
    symbols: tuple[int, int]

    @property
    def principal(self) -> bool:
        return set(self.rows) == set(self.cols)


def _dtype_for(n: int):
    return np.min_scalar_type(max(n - 1, 0))


def is_latin(a: np.ndarray) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    n = a.shape[0]
    if n == 0:
        return True
    if a.min() < 0 or a.max() >= n:
        return False
    want = np.arange(n)
    return bool(np.all(np.sort(a, axis=1) == want) and np.all(np.sort(a, axis=0) == want[:, None]))


def _require_latin(a) -> np.ndarray:
    a = np.asarray(a)
    if not is_latin(a):
        raise LatinSquareError("input is not a Latin square over symbols 0..n-1")
    return a


def circulant(symbols) -> np.ndarray:
    """``cell(i, j) = symbols[(j - i) mod n]``."""
    s = np.asarray(list(symbols))
    n = len(s)
    if n == 0:
        raise LatinSquareError("circulant needs at least one symbol")
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return s[idx].astype(_dtype_for(max(n, int(s.max()) + 1)))


def nabla(a) -> np.ndarray:
    """Order-doubling construction ``A nabla A``.

    Top-left and bottom-right blocks are ``A``, top-right is ``A + n``; the
    bottom-left block has entries ``a[n, i-n] + n`` in column 1 and
    ``a[j-1, i-n] + n`` in columns ``2..n`` (1-based).
    """
    a = _require_latin(a).astype(np.int64)
    n = a.shape[0]
    m = np.empty((2 * n, 2 * n), dtype=np.int64)
    m[:n, :n] = a
    m[:n, n:] = a + n
    m[n:, n:] = a
    # rows i = n+1..2n: column 1 is a[n, i-n] + n, column j >= 2 is a[j-1, i-n] + n
    m[n:, 0] = a[n - 1, :] + n
    m[n:, 1:n] = a[:n - 1, :].T + n
    if __debug__:
        assert np.array_equal(m, _nabla_blocks(a)), "nabla formula disagrees with its block form"
    return m.astype(_dtype_for(2 * n))


def _nabla_blocks(a: np.ndarray) -> np.ndarray:
    """Block form: bottom-left is ``(A + nJ)^T`` times a cyclic column shift."""
    n = a.shape[0]
    shift = np.zeros((n, n), dtype=np.int64)
    shift[:n - 1, 1:] = np.eye(n - 1, dtype=np.int64)
    shift[n - 1, 0] = 1
    lower = (a + n).T @ shift
    return np.block([[a, a + n], [lower, a]])


def nabla_power(a, t: int) -> np.ndarray:
    if t < 0:
        raise ValueError("t must be non-negative")
    out = np.asarray(a)
    for _ in range(t):
        out = nabla(out)
    return out


def base8() -> np.ndarray:
    return BASE8.copy()


def decompose_even(n: int) -> tuple[int, int]:
    """Write an even non-power-of-two ``n`` as ``2**t * m`` with ``m`` odd, ``m >= 3``."""
    if n <= 0 or n % 2 or n & (n - 1) == 0:
        raise ValueError(f"{n} is not an even positive integer other than a power of 2")
    t = (n & -n).bit_length() - 1
    return n >> t, t


def latin_square_no_principal(n: int) -> np.ndarray:
    """Latin square of order ``n`` with zero diagonal and no principal intercalate."""
    if n in (2, 4):
        raise LatinSquareError(f"no Latin square of order {n} without principal intercalates "
                               "and constant diagonal exists")
    if n < 1:
        raise LatinSquareError("order must be positive")
    if n % 2:
        return circulant(range(n))
    if n & (n - 1) == 0:
        return nabla_power(BASE8, n.bit_length() - 4)
    m, t = decompose_even(n)
    return nabla_power(circulant(range(m)), t)


def has_principal_intercalate(a) -> bool:
    """O(n^2) test, valid for squares with constant diagonal."""
    a = np.asarray(a)
    off = ~np.eye(a.shape[0], dtype=bool)
    return bool(np.any((a == a.T) & off))


def find_intercalates(a, principal_only: bool = False) -> list[Intercalate]:
    """All intercalates (or only principal ones), each listed once.

    The full search pairs rows and, per pair, finds columns whose symbols are
    swapped via a symbol-to-column map: O(n^3).
    """
    a = np.asarray(a)
    n = a.shape[0]
    found = []
    if principal_only:
        for i in range(n):
            for j in range(i + 1, n):
                if a[i, j] == a[j, i] and a[i, i] == a[j, j] and a[i, i] != a[i, j]:
                    found.append(Intercalate((i, j), (i, j), (int(a[i, i]), int(a[i, j]))))
        return found
    where = np.argsort(a, axis=1)      # where[r, s] = column of symbol s in row r
    for i in range(n):
        ri = a[i]
        for j in range(i + 1, n):
            rj = a[j]
            partner = where[i, rj]      # column in row i holding the symbol row j has at c
            cols = np.arange(n)
            hits = (partner > cols) & (rj[partner] == ri)
            for c in np.flatnonzero(hits).tolist():
                c2 = int(partner[c])
                found.append(Intercalate((i, j), (c, c2), (int(ri[c]), int(ri[c2]))))
    return found


def normalize_symbols_diag_zero(a) -> np.ndarray:
    """Swap the (constant) diagonal symbol with 0."""
    a = _require_latin(a)
    diag = np.diagonal(a)
    if not np.all(diag == diag[0]):
        raise LatinSquareError("diagonal is not constant")
    s = int(diag[0])
    perm = np.arange(a.shape[0])
    perm[[0, s]] = perm[[s, 0]]
    return perm[a].astype(a.dtype)


def permute_rows_constant_diagonal(a, s: int) -> np.ndarray:
    """Reorder rows so that every diagonal entry equals ``s``."""
    a = _require_latin(a)
    n = a.shape[0]
    if not 0 <= s < n:
        raise ValueError(f"symbol {s} outside 0..{n - 1}")
    rows = np.argmax(a == s, axis=0)        # row holding s in column i
    return a[rows]


# ---------------------------------------------------------------------------
# Small exhaustive enumeration (orders <= 4)
# ---------------------------------------------------------------------------

def enumerate_latin_squares(n: int, diagonal: int | None = None):
    """Yield every Latin square of order ``n`` (optionally with constant diagonal)."""
    if n > 5:
        raise ValueError("exhaustive enumeration is only meant for tiny orders")
    perms = [np.array(p) for p in itertools.permutations(range(n))]
    rows: list[np.ndarray] = []

    def extend(r: int):
        if r == n:
            yield np.array(rows)
            return
        for p in perms:
            if diagonal is not None and p[r] != diagonal:
                continue
            if all(np.all(p != q) for q in rows):
                rows.append(p)
                yield from extend(r + 1)
                rows.pop()

    yield from extend(0)


def parse_square(text: str) -> np.ndarray:
    rows = [line.split() for line in text.replace("\r\n", "\n").splitlines() if line.strip()]
    try:
        arr = np.array([[int(x) for x in r] for r in rows])
    except ValueError as exc:
        raise LatinSquareError(f"square contains a non-integer entry: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise LatinSquareError("square must have n rows of n entries")
    return arr


def format_square(a) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in np.asarray(a)) + "\n"


def search_intercalate_free(n: int) -> np.ndarray | None:
    """Backtracking search for an intercalate-free Latin square of small order.

    Symbols and rows are normalised (first row and first column are
    ``0..n-1``), which preserves intercalate-freeness, so ``None`` is a proof
    that no such square exists.
    """
    if n > 9:
        raise ValueError("search is only meant for small orders")
    a = -np.ones((n, n), dtype=np.int64)
    a[0] = np.arange(n)
    a[:, 0] = np.arange(n)
    row_used = [set(a[r, :1].tolist()) if r else set(range(n)) for r in range(n)]
    col_used = [set(range(n)) if c == 0 else {c} for c in range(n)]
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def clashes(r: int, c: int, s: int) -> bool:
        for r2 in range(r):
            t = a[r2, c]
            for c2 in range(c):
                if a[r2, c2] == s and a[r, c2] == t:
                    return True
        return False

    def fill(i: int) -> bool:
        if i == len(cells):
            return True
        r, c = cells[i]
        for s in range(n):
            if s in row_used[r] or s in col_used[c] or clashes(r, c, s):
                continue
            a[r, c] = s
            row_used[r].add(s)
            col_used[c].add(s)
            if fill(i + 1):
                return True
            row_used[r].discard(s)
            col_used[c].discard(s)
            a[r, c] = -1
        return False

    if n == 1:
        return np.zeros((1, 1), dtype=np.int64)
    return a if fill(0) else None
