"""Product codes of affine codes.

Matrices have ``m`` rows and ``n`` columns.  Rows lie in the row code (length
``n``, dimension ``k``) and columns in the column code (length ``m``,
dimension ``l``).  The information block is ``l x k``.

Inside this module the encoders work in systematic coordinates (rows
permuted by the column code's ``perm``, columns by the row code's ``perm``)
and convert back to original coordinates on return.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterator, Protocol, Sequence

import numpy as np

from . import algebra
from .affine import AffineCode
from .codes import LinearCode, hyperplane_between
from .errors import (
    IncompatibleCosets,
    MissingAllOne,
    NotNested,
    NotSelfComplementary,
    ShapeMismatch,
    TooLargeToEnumerate,
)

ENUMERATION_LIMIT = 2**20


class WordCode(Protocol):
    n: int

    def contains(self, w) -> bool: ...


@dataclass(frozen=True, eq=False)
class ProductCode:
    """An ``(m x n)`` matrix code ``(C + u) x (D + v)``.

    ``leader`` is the coset leader ``U`` in original coordinates: the code is
    exactly ``{classical codeword + U}``.  For Construction IA codes the
    nested pairs ``inner < outer`` are kept so the expurgation can be checked.
    """

    row: AffineCode
    col: AffineCode
    leader: np.ndarray
    kind: str
    row_inner: LinearCode | None = None
    row_outer: LinearCode | None = None
    col_inner: LinearCode | None = None
    col_outer: LinearCode | None = None

    @property
    def m(self) -> int:
        return self.col.n

    @property
    def n(self) -> int:
        return self.row.n

    @property
    def k(self) -> int:
        return self.row.k

    @property
    def l(self) -> int:  # noqa: E743
        return self.col.k

    @property
    def p(self) -> int:
        return self.row.p

    @property
    def dimension(self) -> int:
        return self.k * self.l

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def info_positions(self) -> list[tuple[int, int]]:
        """Original ``(row, column)`` cells carrying the information block, row-major."""
        rows = self.col.base.information_set
        cols = self.row.base.information_set
        return [(i, j) for i in rows for j in cols]

    def _unpermute(self, nperm: np.ndarray) -> np.ndarray:
        rows = list(self.col.base.inv_perm)
        cols = list(self.row.base.inv_perm)
        return nperm[..., rows, :][..., :, cols] % self.p

    def _permute(self, mat: np.ndarray) -> np.ndarray:
        rows = list(self.col.base.perm)
        cols = list(self.row.base.perm)
        return np.asarray(mat)[..., rows, :][..., :, cols]

    def _info(self, info) -> np.ndarray:
        info = np.asarray(info, dtype=np.int64) % self.p
        if info.shape[-2:] != (self.l, self.k):
            raise ShapeMismatch(f"information block must be {self.l}x{self.k}, got {info.shape}")
        return info

    def encode(self, info) -> np.ndarray:
        return encode_cols_then_rows(self, info)

    def information(self, codeword) -> np.ndarray:
        """Read the ``l x k`` information block back out of a codeword."""
        return self._permute(codeword)[..., : self.l, : self.k] % self.p

    def contains(self, mat) -> bool:
        """True iff ``mat - U`` has rows in the row base and columns in the column base."""
        mat = np.asarray(mat, dtype=np.int64)
        if mat.shape != self.shape:
            raise ShapeMismatch(f"matrix shape {mat.shape} != code shape {self.shape}")
        diff = (mat - self.leader) % self.p
        return all(self.row.base.contains(r) for r in diff) and all(
            self.col.base.contains(c) for c in diff.T)

    def classical_encode(self, info) -> np.ndarray:
        """Encode a batch of information blocks into ``C (x) D`` (no leader)."""
        info = self._info(info)
        a_mat = self.row.base.a_matrix
        b_mat = self.col.base.a_matrix
        left = np.concatenate([info, np.einsum("ji,...jk->...ik", b_mat, info)], axis=-2)
        nperm = np.concatenate([left, left @ a_mat], axis=-1)
        return self._unpermute(nperm)


def check_compatibility(a_matrix, b_matrix, a, b, p: int = 2) -> bool:
    """Order-independence condition ``b^T (j_k A - j_{n-k}) == (B^T j_l^T - j_{m-l}^T) a``.

    Args:
        a_matrix: ``A`` of the row code, ``k x (n-k)``.
        b_matrix: ``B`` of the column code, ``l x (m-l)``.
        a: tail of the row representative, length ``n-k``.
        b: tail of the column representative, length ``m-l``.
    """
    a_matrix = np.asarray(a_matrix, dtype=np.int64)
    b_matrix = np.asarray(b_matrix, dtype=np.int64)
    a = np.asarray(a, dtype=np.int64).reshape(-1)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    k, nk = a_matrix.shape
    l, ml = b_matrix.shape  # noqa: E741
    if a.size != nk or b.size != ml:
        raise ShapeMismatch("representative tails do not match the systematic blocks")
    row_defect = np.ones(k, dtype=np.int64) @ a_matrix - np.ones(nk, dtype=np.int64)
    col_defect = b_matrix.T @ np.ones(l, dtype=np.int64) - np.ones(ml, dtype=np.int64)
    lhs = np.outer(b, row_defect) % p
    rhs = np.outer(col_defect, a) % p
    return bool(np.array_equal(lhs, rhs))


def coset_leader(a, b, k: int, l: int, m: int, n: int, p: int = 2,  # noqa: E741
                 a_matrix=None) -> np.ndarray:
    """Coset leader ``U`` in systematic coordinates.

    Without ``a_matrix`` this is the closed form valid when both codes
    contain the all-one word::

        [ 0_{l x k}   | j_l^T a                    ]
        [ b^T j_k     | b^T j_{n-k} + j_{m-l}^T a  ]

    With ``a_matrix`` the bottom-right block is ``b^T j_k A + j_{m-l}^T a``,
    which holds whenever the compatibility condition does.
    """
    a = np.asarray(a, dtype=np.int64).reshape(-1)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if a.size != n - k or b.size != m - l:
        raise ShapeMismatch("representative tails do not match k, l, m, n")
    u = np.zeros((m, n), dtype=np.int64)
    u[:l, k:] = np.outer(np.ones(l, dtype=np.int64), a)
    u[l:, :k] = np.outer(b, np.ones(k, dtype=np.int64))
    if a_matrix is None:
        corner = np.outer(b, np.ones(n - k, dtype=np.int64))
    else:
        corner = np.outer(b, np.ones(k, dtype=np.int64) @ np.asarray(a_matrix, dtype=np.int64))
    u[l:, k:] = corner + np.outer(np.ones(m - l, dtype=np.int64), a)
    return u % p


def _build(row: AffineCode, col: AffineCode, kind: str, closed_form: bool, **nested) -> ProductCode:
    if row.p != col.p:
        raise ValueError("row and column codes are over different fields")
    a_mat, b_mat = row.base.a_matrix, col.base.a_matrix
    if not check_compatibility(a_mat, b_mat, row.tail, col.tail, row.p):
        raise IncompatibleCosets("representatives violate the order-independence condition")
    uperm = coset_leader(row.tail, col.tail, row.k, col.k, col.n, row.n, row.p,
                         None if closed_form else a_mat)
    pc = ProductCode(row, col, algebra.frozen(np.zeros((col.n, row.n))), kind, **nested)
    leader = algebra.frozen(pc._unpermute(uperm))
    object.__setattr__(pc, "leader", leader)
    zero = np.zeros((col.k, row.k), dtype=np.int64)
    assert np.array_equal(encode_cols_then_rows(pc, zero), leader)
    return pc


def classical_product(c: LinearCode, d: LinearCode) -> ProductCode:
    """``C (x) D`` with rows in ``c`` and columns in ``d``."""
    return _build(AffineCode(c), AffineCode(d), "classical", closed_form=False)


def affine_product(row: AffineCode, col: AffineCode) -> ProductCode:
    """Product of two affine codes whose representatives satisfy the compatibility condition.

    Raises:
        IncompatibleCosets: the condition fails, so the two encoding orders
            would give different codes.
    """
    kind = "classical" if row.is_linear and col.is_linear else "affine"
    return _build(row, col, kind, closed_form=False)


def construction_I(row: AffineCode, col: AffineCode) -> ProductCode:
    """Systematic product of cosets of two codes that contain the all-one word."""
    if not row.base.is_self_complementary():
        raise NotSelfComplementary("row")
    if not col.base.is_self_complementary():
        raise NotSelfComplementary("column")
    kind = "classical" if row.is_linear and col.is_linear else "construction_I"
    return _build(row, col, kind, closed_form=True)


def construction_IA(c1: LinearCode, c2: LinearCode, d1: LinearCode, d2: LinearCode) -> ProductCode:
    """Matrix code whose rows avoid ``c1`` inside ``c2`` and columns avoid ``d1`` inside ``d2``.

    Splits off hyperplanes ``c1 <= c3 < c2`` and ``d1 <= d3 < d2`` and applies
    :func:`construction_I` to ``c3 + u`` and ``d3 + v``.  The result has
    dimension ``(k2 - 1)(l2 - 1)``.
    """
    for inner, outer, side in ((c1, c2, "row"), (d1, d2, "column")):
        if not outer.contains_code(inner) or inner.k >= outer.k:
            raise NotNested(f"{side} codes are not strictly nested")
        if not inner.is_self_complementary():
            raise MissingAllOne(f"{side} inner code does not contain the all-one vector")
    c3, u = hyperplane_between(c1, c2)
    d3, v = hyperplane_between(d1, d2)
    pc = construction_I(AffineCode(c3, u), AffineCode(d3, v))
    return replace(pc, kind="construction_IA",
                   row_inner=c1, row_outer=c2, col_inner=d1, col_outer=d2)


def _eq1(pc: ProductCode, info) -> np.ndarray:
    m_info = pc._info(info)
    a_mat, b_mat = pc.row.base.a_matrix, pc.col.base.a_matrix
    a, b = pc.row.tail, pc.col.tail
    k, l, m, n = pc.k, pc.l, pc.m, pc.n  # noqa: E741
    top_right = m_info @ a_mat + np.outer(np.ones(l, dtype=np.int64), a)
    bottom_left = b_mat.T @ m_info + np.outer(b, np.ones(k, dtype=np.int64))
    bottom_right = bottom_left @ a_mat + np.outer(np.ones(m - l, dtype=np.int64), a)
    return np.block([[m_info, top_right], [bottom_left, bottom_right]]).reshape(m, n)


def encode_cols_then_rows(pc: ProductCode, info) -> np.ndarray:
    """Encode the first ``k`` columns by the column code, then every row."""
    return pc._unpermute(_eq1(pc, info))


def encode_rows_then_cols(pc: ProductCode, info) -> np.ndarray:
    """Encode the first ``l`` rows by the row code, then every column."""
    m_info = pc._info(info)
    a_mat, b_mat = pc.row.base.a_matrix, pc.col.base.a_matrix
    a, b = pc.row.tail, pc.col.tail
    k, l, m, n = pc.k, pc.l, pc.m, pc.n  # noqa: E741
    top_right = m_info @ a_mat + np.outer(np.ones(l, dtype=np.int64), a)
    bottom_left = b_mat.T @ m_info + np.outer(b, np.ones(k, dtype=np.int64))
    bottom_right = b_mat.T @ top_right + np.outer(b, np.ones(n - k, dtype=np.int64))
    nperm = np.block([[m_info, top_right], [bottom_left, bottom_right]]).reshape(m, n)
    return pc._unpermute(nperm)


def information_blocks(pc: ProductCode, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Information matrices in row-major lexicographic order."""
    flat = algebra.messages(pc.dimension, pc.p, start, stop)
    return flat.reshape(-1, pc.l, pc.k)


def enumerate_codewords(pc: ProductCode, limit: int = ENUMERATION_LIMIT) -> Iterator[np.ndarray]:
    """Yield every codeword once, ordered by information matrix."""
    for block in iter_codeword_blocks(pc, limit):
        yield from block


def iter_codeword_blocks(pc: ProductCode, limit: int = ENUMERATION_LIMIT,
                         chunk: int = 2**12) -> Iterator[np.ndarray]:
    total = pc.p**pc.dimension
    if total > limit:
        raise TooLargeToEnumerate(f"{pc.p}^{pc.dimension} codewords exceed the limit {limit}")
    for start in range(0, total, chunk):
        info = information_blocks(pc, start, start + chunk)
        yield (pc.classical_encode(info) + pc.leader) % pc.p


def codeword_array(pc: ProductCode, limit: int = 2**16) -> np.ndarray:
    """All codewords stacked into a ``(p^(kl), m, n)`` array."""
    return np.concatenate(list(iter_codeword_blocks(pc, limit)))


class Expurgated:
    """The set difference ``outer \\ inner`` of two nested linear codes."""

    def __init__(self, outer: LinearCode, inner: LinearCode):
        if not outer.contains_code(inner):
            raise NotNested("inner code is not contained in the outer code")
        self.outer = outer
        self.inner = inner
        self.n = outer.n

    def contains(self, w) -> bool:
        return self.outer.contains(w) and not self.inner.contains(w)


def verify_property(mat, row_code: WordCode, col_code: WordCode) -> bool:
    """Every row of ``mat`` is in ``row_code`` and every column in ``col_code``."""
    mat = np.asarray(mat, dtype=np.int64)
    if mat.ndim != 2 or mat.shape != (col_code.n, row_code.n):
        raise ShapeMismatch(f"matrix shape {mat.shape} does not fit the component codes")
    return all(row_code.contains(r) for r in mat) and all(col_code.contains(c) for c in mat.T)


def union_coset_size(k1: int, l1: int, size_u: int, size_v: int, p: int = 2) -> int:
    """Size ``|U| |V| p^(k1 l1)`` of the union-of-cosets matrix code."""
    return size_u * size_v * p ** (k1 * l1)


def expurgated_union_size(k1: int, k2: int, l1: int, l2: int, p: int = 2) -> int:
    """Union-of-cosets size when every nonzero coset of the inner codes is used."""
    return union_coset_size(k1, l1, p ** (k2 - k1) - 1, p ** (l2 - l1) - 1, p)


def union_coset_contains(mat, c1: LinearCode, d1: LinearCode,
                         row_reps: Sequence, col_reps: Sequence) -> bool:
    """Whether ``mat`` lies in one of the Construction I cosets ``(c1 + u) x (d1 + v)``."""
    for u, v in itertools.product(row_reps, col_reps):
        if construction_I(AffineCode(c1, u), AffineCode(d1, v)).contains(mat):
            return True
    return False


def min_pairwise_distance(words) -> int:
    """Minimum Hamming distance between distinct rows of ``words`` (flattened)."""
    flat = np.asarray(words).reshape(len(words), -1)
    best = flat.shape[1] + 1
    for start in range(0, len(flat), 256):
        block = flat[start:start + 256]
        dist = (block[:, None, :] != flat[None, :, :]).sum(axis=2)
        idx = np.arange(start, start + len(block))
        dist[np.arange(len(block)), idx] = best
        best = min(best, int(dist.min()))
    return best
