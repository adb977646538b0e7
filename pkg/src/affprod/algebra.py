"""Dense linear algebra over a prime field GF(p).

Matrices are plain 2-D ``numpy`` integer arrays holding residues in
``[0, p)``.  Every function takes the modulus explicitly (``p=2`` by
default) and returns new arrays; nothing is modified in place.

Row reduction always pivots on the leftmost nonzero column, so reduced
forms and pivot lists are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import NoSolution, NotPrime, RankDeficient, ShapeMismatch, Underdetermined

ERASED = -1
"""Marker for an erased symbol in received words and matrices."""


def check_prime(p: int) -> int:
    p = int(p)
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise NotPrime(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int = 2

    def __post_init__(self):
        check_prime(self.p)

    def inv(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)


def as_matrix(data, p: int = 2) -> np.ndarray:
    """Return ``data`` as a read-only 2-D int64 array reduced mod ``p``.

    A 1-D input becomes a single row.
    """
    arr = np.array(data, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {arr.shape}")
    arr %= p
    arr.flags.writeable = False
    return arr


def as_vector(data, p: int = 2) -> np.ndarray:
    arr = np.array(data, dtype=np.int64).reshape(-1) % p
    arr.flags.writeable = False
    return arr


def frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


def ones(n: int) -> np.ndarray:
    """The all-one row vector of length ``n``."""
    return np.ones(n, dtype=np.int64)


class RREF(NamedTuple):
    reduced: np.ndarray
    rank: int
    pivots: list[int]


def rref(m, p: int = 2) -> RREF:
    """Reduced row echelon form over GF(p).

    Returns:
        ``(reduced, rank, pivots)`` where ``pivots`` lists the pivot column
        of each nonzero row of ``reduced`` in order.
    """
    r = np.array(m, dtype=np.int64) % p
    if r.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {r.shape}")
    rows, cols = r.shape
    pivots: list[int] = []
    prow = 0
    for col in range(cols):
        if prow == rows:
            break
        nz = np.flatnonzero(r[prow:, col])
        if nz.size == 0:
            continue
        found = prow + int(nz[0])
        if found != prow:
            r[[prow, found]] = r[[found, prow]]
        if p == 2:
            hit = np.flatnonzero(r[:, col])
            hit = hit[hit != prow]
            r[hit] ^= r[prow]
        else:
            r[prow] = (r[prow] * pow(int(r[prow, col]), -1, p)) % p
            factors = r[:, col].copy()
            factors[prow] = 0
            r = (r - np.outer(factors, r[prow])) % p
        pivots.append(col)
        prow += 1
    r.flags.writeable = False
    return RREF(r, len(pivots), pivots)


def rank(m, p: int = 2) -> int:
    return rref(m, p).rank


def systematic_form(g, p: int = 2) -> tuple[np.ndarray, list[int]]:
    """Bring a full-row-rank generator to the form ``(I_k | A)``.

    Each non-pivot column among the first ``k`` positions is swapped with the
    next pivot column to its right.  ``perm[i]`` is the original column that
    sits at position ``i`` of the systematic form, so a codeword ``w`` in
    original coordinates reads ``w[perm] == (x, x @ A)``.

    Raises:
        RankDeficient: if ``g`` does not have full row rank.
    """
    g = np.asarray(g, dtype=np.int64)
    if g.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {g.shape}")
    k, n = g.shape
    red = rref(g, p)
    if red.rank < k:
        raise RankDeficient(f"generator has rank {red.rank} < {k} rows")
    perm = list(range(n))
    for i, piv in enumerate(red.pivots):
        if piv != i:
            perm[i], perm[piv] = perm[piv], perm[i]
    a = red.reduced[:, perm[k:]]
    return frozen(a.reshape(k, n - k)), perm


def solve(coeffs, rhs, p: int = 2) -> np.ndarray:
    """Solve ``coeffs @ x == rhs`` for a unique ``x`` over GF(p).

    Raises:
        NoSolution: the system is inconsistent (checked first).
        Underdetermined: the solution space has positive dimension.
    """
    a = np.asarray(coeffs, dtype=np.int64)
    if a.ndim != 2:
        raise ShapeMismatch(f"coefficient matrix must be 2-D, got {a.shape}")
    r, c = a.shape
    b = np.asarray(rhs, dtype=np.int64).reshape(-1)
    if b.size != r:
        raise ShapeMismatch(f"rhs has {b.size} entries for {r} equations")
    red = rref(np.hstack([a, b.reshape(r, 1)]), p)
    if red.pivots and red.pivots[-1] == c:
        raise NoSolution("inconsistent linear system")
    if red.rank < c:
        raise Underdetermined(f"rank {red.rank} < {c} unknowns")
    x = np.zeros(c, dtype=np.int64)
    for row, piv in enumerate(red.pivots):
        x[piv] = red.reduced[row, c]
    return x


def parse_matrix(text: str, p: int = 2, *, allow_erasures: bool = False) -> np.ndarray:
    """Parse the text matrix format: one row per line.

    For ``p == 2`` each line is a string of digits without separators; for
    larger ``p`` entries are separated by whitespace.  With
    ``allow_erasures`` the character ``e`` denotes :data:`ERASED`.
    """
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        tokens = list(line.replace(" ", "")) if p == 2 else line.split()
        row = []
        for tok in tokens:
            if tok == "e" and allow_erasures:
                row.append(ERASED)
                continue
            if not tok.isdigit() or int(tok) >= p:
                raise ValueError(f"bad matrix entry {tok!r} for p={p}")
            row.append(int(tok))
        rows.append(row)
    if len({len(r) for r in rows}) > 1:
        raise ShapeMismatch("ragged matrix text")
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0)
    arr.flags.writeable = False
    return arr


def format_row(row: Sequence[int], p: int = 2) -> str:
    symbols = ["e" if int(v) == ERASED else str(int(v)) for v in row]
    return "".join(symbols) if p == 2 else " ".join(symbols)


def format_matrix(m, p: int = 2) -> str:
    return "\n".join(format_row(row, p) for row in np.asarray(m)) + "\n"


def parse_word(text: str, p: int = 2, *, allow_erasures: bool = False) -> np.ndarray:
    return parse_matrix(text, p, allow_erasures=allow_erasures).reshape(-1)


def messages(k: int, p: int = 2, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Information vectors number ``start`` .. ``stop - 1`` in lexicographic order."""
    total = p**k
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p
