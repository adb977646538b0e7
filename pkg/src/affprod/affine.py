"""Affine codes: cosets ``C + u`` of a linear code.

The representative is stored canonically as the tail ``a`` of
``(0_k, a)`` in the base code's systematic coordinates.  That is the only
place permuted coordinates appear; every method takes and returns words in
the original coordinate order.
"""

from __future__ import annotations

import numpy as np

from . import algebra
from .algebra import ERASED
from .codes import ENUMERATION_LIMIT, LinearCode
from .errors import (
    Ambiguous,
    BoundedDistanceFailure,
    Inconsistent,
    NoSolution,
    ShapeMismatch,
    Underdetermined,
)


class AffineCode:
    """The coset ``base + u``; ``u`` may be any element of the coset."""

    def __init__(self, base: LinearCode, u=None):
        self.base = base
        if u is None:
            u = np.zeros(base.n, dtype=np.int64)
        self.tail = algebra.frozen(base.coset_tail(u))
        self.rep = base.coset_representative(u)

    def __repr__(self):
        return f"<AffineCode {self.base!r} + {algebra.format_row(self.rep, self.p)}>"

    def __eq__(self, other):
        if not isinstance(other, AffineCode):
            return NotImplemented
        return self.base is other.base and bool(np.array_equal(self.rep, other.rep))

    def __hash__(self):
        return hash((id(self.base), self.rep.tobytes()))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def is_linear(self) -> bool:
        return not self.rep.any()

    def encode(self, x) -> np.ndarray:
        """``(x, x A + a)`` in original coordinates."""
        return (self.base.encode(x) + self.rep) % self.p

    def contains(self, w) -> bool:
        w = self.base.check_word(w)
        return self.base.contains((w - self.rep) % self.p)

    def codewords(self, limit: int = 2**16) -> np.ndarray:
        return (self.base.codewords(limit) + self.rep) % self.p

    def weight_profile(self) -> tuple[int, int]:
        """Exact ``(min, max)`` Hamming weight over the coset."""
        lo, hi = self.n, 0
        for block in self.base.iter_codeword_blocks(ENUMERATION_LIMIT):
            weights = np.count_nonzero((block + self.rep) % self.p, axis=1)
            lo = min(lo, int(weights.min()))
            hi = max(hi, int(weights.max()))
        return lo, hi

    def erasure_decode(self, w) -> np.ndarray:
        """Fill in erased coordinates of ``w`` (entries equal to ``ERASED``).

        Raises:
            Ambiguous: several codewords agree with the known coordinates.
            Inconsistent: no codeword agrees with them.
        """
        w = np.asarray(w, dtype=np.int64).reshape(-1)
        if w.size != self.n:
            raise ShapeMismatch(f"word has length {w.size}, code length is {self.n}")
        known = np.flatnonzero(w != ERASED)
        shifted = (w[known] - self.rep[known]) % self.p
        coeffs = self.base.systematic_generator[:, known].T
        try:
            x = algebra.solve(coeffs, shifted, self.p)
        except Underdetermined:
            raise Ambiguous(f"{self.n - known.size} erasures leave the word undetermined") from None
        except NoSolution:
            raise Inconsistent("no codeword matches the unerased coordinates") from None
        return self.encode(x)

    def bounded_distance_decode(self, w, radius: int) -> np.ndarray:
        """Unique coset element within Hamming distance ``radius`` of ``w``.

        Exhaustive search.  Raises BoundedDistanceFailure when there is no
        such element, or more than one.
        """
        w = self.base.check_word(w)
        found = None
        for block in self.base.iter_codeword_blocks(ENUMERATION_LIMIT):
            block = (block + self.rep) % self.p
            dist = np.count_nonzero(block != w, axis=1)
            close = np.flatnonzero(dist <= radius)
            if close.size > 1 or (close.size and found is not None):
                raise BoundedDistanceFailure(f"several codewords within radius {radius}")
            if close.size:
                found = block[close[0]]
        if found is None:
            raise BoundedDistanceFailure(f"no codeword within radius {radius}")
        return found
