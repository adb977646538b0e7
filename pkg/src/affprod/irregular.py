"""Irregular products: row ``i`` lies in its own code ``C_i``, column ``j`` in ``D_j``.

Row codes have length ``n`` and dimensions ``k_1 <= ... <= k_m``; column codes
have length ``m`` and dimensions ``l_1 <= ... <= l_n``.  With nested chains
the code has dimension

    K = sum_j sum_{l_{j-1} < i <= l_j} max(k_i - j + 1, 0)

and the affine version translates every codeword by a fixed matrix built
from the representatives ``u = (0_{k_m}, a)`` and ``v = (0_{l_n}, b)``.

Every component code must have its information set in the leading
coordinates (systematic permutation equal to the identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import algebra
from .affine import AffineCode
from .codes import LinearCode
from .errors import AffprodError, NotNested, PreconditionError, ShapeMismatch, TooLargeToEnumerate
from .plc import WeightBounds, weight_bounds

ENUMERATION_LIMIT = 2**16


class EncodingInconsistency(AffprodError):
    """Row and column encoders disagreed; cannot happen for nested chains."""


def _chain_nested(codes: Sequence[LinearCode]) -> bool:
    return all(b.contains_code(a) for a, b in zip(codes, codes[1:]))


@dataclass(frozen=True, eq=False)
class IrregularSpec:
    row_codes: tuple[LinearCode, ...]
    col_codes: tuple[LinearCode, ...]
    row_rep: np.ndarray | None = None
    col_rep: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "row_codes", tuple(self.row_codes))
        object.__setattr__(self, "col_codes", tuple(self.col_codes))
        m, n = len(self.row_codes), len(self.col_codes)
        if m == 0 or n == 0:
            raise ShapeMismatch("need at least one row code and one column code")
        if any(c.n != n for c in self.row_codes):
            raise ShapeMismatch(f"row codes must have length {n} (number of columns)")
        if any(d.n != m for d in self.col_codes):
            raise ShapeMismatch(f"column codes must have length {m} (number of rows)")
        if len({c.p for c in self.row_codes + self.col_codes}) != 1:
            raise ValueError("component codes are over different fields")
        for name, rep, size, lead in (("row_rep", self.row_rep, n, self.k_max),
                                      ("col_rep", self.col_rep, m, self.l_max)):
            if rep is None:
                continue
            rep = algebra.as_vector(rep, self.p)
            if rep.size != size:
                raise ShapeMismatch(f"{name} must have length {size}")
            if rep[:lead].any():
                raise PreconditionError(f"{name} must vanish on its first {lead} coordinates")
            object.__setattr__(self, name, rep)

    @property
    def m(self) -> int:
        return len(self.row_codes)

    @property
    def n(self) -> int:
        return len(self.col_codes)

    @property
    def p(self) -> int:
        return self.row_codes[0].p

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def row_dims(self) -> list[int]:
        return [c.k for c in self.row_codes]

    @property
    def col_dims(self) -> list[int]:
        return [d.k for d in self.col_codes]

    @property
    def k_max(self) -> int:
        return max(self.row_dims)

    @property
    def l_max(self) -> int:
        return max(self.col_dims)

    @property
    def nested_rows(self) -> bool:
        return _chain_nested(self.row_codes)

    @property
    def nested_cols(self) -> bool:
        return _chain_nested(self.col_codes)

    @property
    def u(self) -> np.ndarray:
        return self.row_rep if self.row_rep is not None else np.zeros(self.n, dtype=np.int64)

    @property
    def v(self) -> np.ndarray:
        return self.col_rep if self.col_rep is not None else np.zeros(self.m, dtype=np.int64)

    @property
    def is_affine(self) -> bool:
        return bool(self.u.any() or self.v.any())

    def linear_part(self) -> "IrregularSpec":
        return IrregularSpec(self.row_codes, self.col_codes)

    def check_affine(self):
        """Representatives outside every component code, all-one word inside each."""
        if not self.is_affine:
            return
        if not all(c.is_self_complementary() for c in self.row_codes + self.col_codes):
            raise PreconditionError("every component code must contain the all-one vector")
        if self.u.any() and any(c.contains(self.u) for c in self.row_codes):
            raise PreconditionError("row representative lies in a row code")
        if self.v.any() and any(d.contains(self.v) for d in self.col_codes):
            raise PreconditionError("column representative lies in a column code")


def irregular_dimension(row_dims: Sequence[int], col_dims: Sequence[int]) -> int:
    """The dimension formula, from the sorted dimension sequences alone."""
    ks, ls = list(row_dims), list(col_dims)
    if ks != sorted(ks) or ls != sorted(ls):
        raise PreconditionError("row and column dimensions must be nondecreasing")
    if ls and ls[-1] > len(ks):
        raise PreconditionError("a column dimension exceeds the number of rows")
    total = 0
    prev = 0
    for j, lj in enumerate(ls, start=1):
        for i in range(prev + 1, lj + 1):
            total += max(ks[i - 1] - j + 1, 0)
        prev = lj
    return total


def dimension_bound(spec: IrregularSpec) -> int:
    return irregular_dimension(spec.row_dims, spec.col_dims)


def free_cells(spec: IrregularSpec) -> list[tuple[int, int]]:
    """Cells set directly by information symbols, in column-major order.

    Cell ``(i, j)`` is free when ``j`` is an information coordinate of row
    ``i`` and ``i`` one of column ``j``; there are exactly ``K`` of them.
    """
    ks, ls = spec.row_dims, spec.col_dims
    return [(i, j) for j in range(spec.n) for i in range(ls[j]) if j < ks[i]]


def _check_encodable(spec: IrregularSpec):
    if not (spec.nested_rows and spec.nested_cols):
        raise NotNested("the encoder needs nested row and column chains")
    for code in spec.row_codes + spec.col_codes:
        if code.perm != tuple(range(code.n)):
            raise PreconditionError(f"{code!r} has no information set in its leading coordinates")
    spec.check_affine()


def encode_irregular(spec: IrregularSpec, info) -> np.ndarray:
    """Encode ``K`` information symbols into an ``m x n`` codeword.

    Rows ``0 .. l_n - 1`` are processed top to bottom: each row's information
    coordinates are either free symbols or parity symbols of their column's
    code (computed from rows already done), and the row is then completed by
    its own affine encoder.  Every column is then completed by its affine
    encoder, which fills rows ``l_n .. m - 1``.
    """
    _check_encodable(spec)
    cells = free_cells(spec)
    info = np.asarray(info, dtype=np.int64).reshape(-1) % spec.p
    if info.size != len(cells):
        raise ShapeMismatch(f"expected {len(cells)} information symbols, got {info.size}")
    ks, ls, l_n = spec.row_dims, spec.col_dims, spec.l_max
    rows = [AffineCode(c, spec.u) for c in spec.row_codes]
    cols = [AffineCode(d, spec.v) for d in spec.col_codes]

    out = np.zeros(spec.shape, dtype=np.int64)
    for value, (i, j) in zip(info, cells):
        out[i, j] = value
    for i in range(l_n):
        for j in range(ks[i]):
            if i >= ls[j]:
                out[i, j] = cols[j].encode(out[: ls[j], j])[i]
        out[i] = rows[i].encode(out[i, : ks[i]])
    for j in range(spec.n):
        column = cols[j].encode(out[: ls[j], j])
        if not np.array_equal(column[ls[j]:l_n], out[ls[j]:l_n, j]):
            raise EncodingInconsistency(f"column {j} disagrees with its row encodings")
        out[l_n:, j] = column[l_n:]
    for i in range(l_n, spec.m):
        if not rows[i].contains(out[i]):
            raise EncodingInconsistency(f"row {i} left its row code")
    return out


def translate_matrix(spec: IrregularSpec) -> np.ndarray:
    """The translate taking the linear irregular code to the affine one.

    Zero on the leading ``l_n x k_m`` block, ``j^T a`` to its right,
    ``b^T j`` below it and ``b^T j + j^T a`` in the corner.
    """
    spec.check_affine()
    k_m, l_n = spec.k_max, spec.l_max
    a = spec.u[k_m:]
    b = spec.v[l_n:]
    out = np.zeros(spec.shape, dtype=np.int64)
    out[:l_n, k_m:] = a[None, :]
    out[l_n:, :k_m] = b[:, None]
    out[l_n:, k_m:] = b[:, None] + a[None, :]
    return out % spec.p


def verify_irregular(mat, spec: IrregularSpec) -> bool:
    """Row ``i`` in ``C_i + u`` and column ``j`` in ``D_j + v`` for all ``i``, ``j``."""
    mat = np.asarray(mat, dtype=np.int64)
    if mat.shape != spec.shape:
        raise ShapeMismatch(f"matrix shape {mat.shape} != spec shape {spec.shape}")
    u, v, p = spec.u, spec.v, spec.p
    return all(c.contains((r - u) % p) for c, r in zip(spec.row_codes, mat)) and all(
        d.contains((col - v) % p) for d, col in zip(spec.col_codes, mat.T))


def enumerate_irregular(spec: IrregularSpec, limit: int = ENUMERATION_LIMIT) -> np.ndarray:
    """All codewords, ordered lexicographically by information vector."""
    dim = dimension_bound(spec)
    if spec.p**dim > limit:
        raise TooLargeToEnumerate(f"{spec.p}^{dim} codewords exceed the limit {limit}")
    msgs = algebra.messages(dim, spec.p)
    return np.stack([encode_irregular(spec, x) for x in msgs])


class CertifiedBounds(NamedTuple):
    bounds: WeightBounds
    certified: bool


def weight_bounds_irregular(spec: IrregularSpec, row_super: LinearCode,
                            col_super: LinearCode) -> CertifiedBounds:
    """Row/column weight extremes, checked against ``[d_C, n - d_C] x [d_D, m - d_D]``.

    Raises:
        PreconditionError: naming the first violated hypothesis (binary field,
            component codes inside the supercodes, representatives in the
            supercodes but outside every component code).
    """
    if spec.p != 2:
        raise PreconditionError("weight bounds are stated for binary codes only")
    if not (spec.u.any() and spec.v.any()):
        raise PreconditionError("both representatives must be nonzero")
    if not all(row_super.contains_code(c) for c in spec.row_codes):
        raise PreconditionError("a row code is not inside the row supercode")
    if not all(col_super.contains_code(d) for d in spec.col_codes):
        raise PreconditionError("a column code is not inside the column supercode")
    if not row_super.contains(spec.u):
        raise PreconditionError("row representative is not in the row supercode")
    if not col_super.contains(spec.v):
        raise PreconditionError("column representative is not in the column supercode")
    spec.check_affine()
    bounds = weight_bounds([enumerate_irregular(spec)])
    d_c, d_d = row_super.min_distance, col_super.min_distance
    ok = bounds.within(d_c, spec.n - d_c, d_d, spec.m - d_d)
    return CertifiedBounds(bounds, ok)
