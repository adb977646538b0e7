"""Linear codes given by generator matrices, plus the standard families.

A :class:`LinearCode` caches its systematic form ``(I_k | A)`` together with
the column permutation that produces it.  All public inputs and outputs are
in the original coordinate order; ``perm`` is only needed by callers that
want the systematic block explicitly.
"""

from __future__ import annotations

import threading
from typing import Iterator

import numpy as np

from . import algebra
from .errors import (
    EqualDimensions,
    NotNested,
    RankDeficient,
    ShapeMismatch,
    TooLargeToEnumerate,
)

ENUMERATION_LIMIT = 2**24
_CHUNK = 2**14


class LinearCode:
    """A linear ``[n, k]`` code over GF(p) with a full-row-rank generator.

    Attributes:
        generator: the ``k x n`` generator as given (read-only).
        a_matrix: ``A`` of the systematic encoder ``(I_k | A)``.
        perm: ``perm[i]`` is the original column at systematic position ``i``.
        systematic_generator: ``(I_k | A)`` mapped back to original columns.
    """

    def __init__(self, generator, p: int = 2, name: str | None = None):
        self.p = algebra.check_prime(p)
        g = np.array(generator, dtype=np.int64)
        if g.ndim != 2:
            raise ShapeMismatch(f"generator must be 2-D, got shape {g.shape}")
        self.generator = algebra.as_matrix(g, p)
        self.k, self.n = self.generator.shape
        if self.k == 0:
            raise RankDeficient("a code needs at least one generator row")
        self.a_matrix, perm = algebra.systematic_form(self.generator, p)
        self.perm = tuple(perm)
        self.inv_perm = tuple(int(i) for i in np.argsort(perm))
        sys_perm = np.hstack([np.eye(self.k, dtype=np.int64), self.a_matrix])
        self.systematic_generator = algebra.frozen(sys_perm[:, self.inv_perm])
        self.name = name
        self._distance: int | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}] over GF({self.p})>"

    @property
    def information_set(self) -> tuple[int, ...]:
        return self.perm[: self.k]

    @property
    def size(self) -> int:
        return self.p**self.k

    def to_permuted(self, w) -> np.ndarray:
        return np.asarray(w)[..., list(self.perm)]

    def from_permuted(self, w) -> np.ndarray:
        return np.asarray(w)[..., list(self.inv_perm)]

    def encode(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if x.shape[-1] != self.k:
            raise ShapeMismatch(f"information vector must have length {self.k}")
        return (x @ self.systematic_generator) % self.p

    def check_word(self, w) -> np.ndarray:
        w = np.asarray(w, dtype=np.int64).reshape(-1)
        if w.size != self.n:
            raise ShapeMismatch(f"word has length {w.size}, code length is {self.n}")
        return w % self.p

    def contains(self, w) -> bool:
        """Row-space membership, decided by a rank comparison."""
        w = self.check_word(w)
        stacked = np.vstack([self.generator, w])
        return algebra.rank(stacked, self.p) == self.k

    def contains_code(self, other: "LinearCode") -> bool:
        return other.n == self.n and all(self.contains(row) for row in other.generator)

    def is_self_complementary(self) -> bool:
        return self.contains(algebra.ones(self.n))

    def coset_representative(self, u) -> np.ndarray:
        """The unique element of ``self + u`` that vanishes on the information set.

        Uses ``(u1, u2) -> (0, u2 - u1 A)`` in systematic coordinates.
        """
        u = self.check_word(u)
        return algebra.frozen(self.from_permuted(np.concatenate(
            [np.zeros(self.k, dtype=np.int64), self.coset_tail(u)])))

    def coset_tail(self, u) -> np.ndarray:
        """The ``a`` of the canonical representative ``(0_k, a)``."""
        up = self.to_permuted(self.check_word(u))
        return (up[self.k:] - up[: self.k] @ self.a_matrix) % self.p

    def check_enumerable(self, limit: int = ENUMERATION_LIMIT):
        if self.size > limit:
            raise TooLargeToEnumerate(f"{self.p}^{self.k} codewords exceed the limit {limit}")

    def iter_codeword_blocks(self, limit: int = ENUMERATION_LIMIT) -> Iterator[np.ndarray]:
        """Yield all codewords in blocks, in lexicographic order of messages."""
        self.check_enumerable(limit)
        for start in range(0, self.size, _CHUNK):
            msgs = algebra.messages(self.k, self.p, start, start + _CHUNK)
            yield (msgs @ self.systematic_generator) % self.p

    def codewords(self, limit: int = 2**16) -> np.ndarray:
        return np.vstack(list(self.iter_codeword_blocks(limit)))

    @property
    def min_distance(self) -> int:
        """Exact minimum Hamming weight of a nonzero codeword (by enumeration)."""
        with self._lock:
            if self._distance is None:
                best = self.n
                for block in self.iter_codeword_blocks():
                    weights = np.count_nonzero(block, axis=1)
                    weights = weights[weights > 0]
                    if weights.size:
                        best = min(best, int(weights.min()))
                self._distance = best
            return self._distance

    @classmethod
    def spanned_by(cls, rows, p: int = 2, name: str | None = None) -> "LinearCode":
        """The code spanned by possibly dependent ``rows``."""
        red = algebra.rref(algebra.as_matrix(rows, p), p)
        if red.rank == 0:
            raise RankDeficient("rows span the zero code")
        return cls(red.reduced[: red.rank], p, name)


def even_weight(n: int) -> LinearCode:
    """The ``[n, n-1, 2]`` single-parity-check code."""
    if n < 2:
        raise ValueError("even_weight needs n >= 2")
    g = np.hstack([np.eye(n - 1, dtype=np.int64), np.ones((n - 1, 1), dtype=np.int64)])
    return LinearCode(g, 2, f"even_weight({n})")


def repetition(n: int, p: int = 2) -> LinearCode:
    if n < 1:
        raise ValueError("repetition needs n >= 1")
    return LinearCode(np.ones((1, n), dtype=np.int64), p, f"repetition({n})")


def full_space(n: int, p: int = 2) -> LinearCode:
    if n < 1:
        raise ValueError("full_space needs n >= 1")
    return LinearCode(np.eye(n, dtype=np.int64), p, f"full_space({n})")


def reed_muller_1(r: int) -> LinearCode:
    """First-order Reed-Muller code ``[2^r, r+1, 2^(r-1)]``.

    Rows are the all-one word followed by the ``r`` coordinate functions;
    column ``c`` evaluates at the point whose bits are ``c`` (MSB first).
    """
    if r < 1:
        raise ValueError("reed_muller_1 needs r >= 1")
    cols = np.arange(2**r)
    bits = [(cols >> (r - 1 - i)) & 1 for i in range(r)]
    g = np.vstack([np.ones(2**r, dtype=np.int64), *bits])
    return LinearCode(g, 2, f"reed_muller_1({r})")


FAMILIES = {
    "even_weight": (even_weight, "n"),
    "repetition": (repetition, "n"),
    "full_space": (full_space, "n"),
    "reed_muller_1": (reed_muller_1, "r"),
}


def family(kind: str, **params) -> LinearCode:
    try:
        build, key = FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown code family {kind!r}") from None
    if set(params) != {key}:
        raise ValueError(f"family {kind!r} takes exactly the parameter {key!r}")
    return build(int(params[key]))


def hyperplane_between(c1: LinearCode, c2: LinearCode) -> tuple[LinearCode, np.ndarray]:
    """Pick ``c3`` with ``c1 <= c3 < c2``, ``dim c3 = dim c2 - 1``, and ``u`` in ``c2 \\ c3``.

    A basis of ``c1`` is extended to one of ``c2`` by scanning the rows of
    ``c2.generator`` in order and keeping those independent of the span so
    far.  ``c3`` drops the last kept row, which becomes ``u``.

    Raises:
        NotNested: ``c1`` is not a subcode of ``c2``.
        EqualDimensions: ``dim c1 == dim c2``.
    """
    if c1.p != c2.p or not c2.contains_code(c1):
        raise NotNested("first code is not contained in the second")
    if c1.k >= c2.k:
        raise EqualDimensions("nested codes have equal dimension")
    basis = [row for row in c1.generator]
    kept = []
    current = c1.k
    for row in c2.generator:
        trial = algebra.rank(np.vstack(basis + [row]), c2.p)
        if trial > current:
            basis.append(row)
            kept.append(row)
            current = trial
    u = algebra.frozen(kept[-1])
    c3 = LinearCode(np.vstack(basis[:-1]), c2.p)
    return c3, u
