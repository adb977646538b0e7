"""Checks run by ``affprod verify`` on a product code."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import LinearCode
from .plc import make_rng, weight_bounds_report
from .product import (
    ProductCode,
    codeword_array,
    encode_cols_then_rows,
    encode_rows_then_cols,
    information_blocks,
    min_pairwise_distance,
    verify_property,
)

EXHAUSTIVE_LIMIT = 2**12
DISTANCE_LIMIT = 2**10


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skipped"
    detail: str

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _info_matrices(pc: ProductCode, samples: int, seed: int) -> tuple[np.ndarray, bool]:
    if pc.p**pc.dimension <= EXHAUSTIVE_LIMIT:
        return information_blocks(pc), True
    rng = make_rng(seed)
    return rng.integers(0, pc.p, size=(samples, pc.l, pc.k)), False


def weight_guarantee(pc: ProductCode) -> tuple[int, int, int, int] | None:
    """``(d_C', n - d_C', d_D', m - d_D')`` when rows and columns provably have bounded weight.

    Needs a binary code, nonzero representatives and all-one words in both
    bases; ``C'`` is the span of the row base and its representative.
    """
    if pc.p != 2 or pc.row.is_linear or pc.col.is_linear:
        return None
    if not (pc.row.base.is_self_complementary() and pc.col.base.is_self_complementary()):
        return None
    d_row = LinearCode.spanned_by(np.vstack([pc.row.base.generator, pc.row.rep])).min_distance
    d_col = LinearCode.spanned_by(np.vstack([pc.col.base.generator, pc.col.rep])).min_distance
    return d_row, pc.n - d_row, d_col, pc.m - d_col


def verify_product(pc: ProductCode, samples: int = 500, seed: int = 0) -> list[CheckResult]:
    infos, exhaustive = _info_matrices(pc, samples, seed)
    scope = f"all {len(infos)}" if exhaustive else f"{len(infos)} random"
    results = []

    words = []
    same = True
    for info in infos:
        first = encode_cols_then_rows(pc, info)
        same &= bool(np.array_equal(first, encode_rows_then_cols(pc, info)))
        words.append(first)
    results.append(CheckResult("order-independence", "pass" if same else "fail",
                               f"{scope} information matrices"))

    prop = all(verify_property(w, pc.row, pc.col) for w in words)
    results.append(CheckResult("property", "pass" if prop else "fail",
                               f"rows in row coset, columns in column coset ({scope})"))

    if exhaustive:
        cells = pc.info_positions
        patterns = {tuple(w[i, j] for i, j in cells) for w in words}
        ok = len(patterns) == pc.p**pc.dimension
        detail = f"{len(patterns)} of {pc.p ** pc.dimension} patterns on {len(cells)} cells"
        results.append(CheckResult("systematic", "pass" if ok else "fail", detail))
    else:
        ok = all(np.array_equal(pc.information(w), i % pc.p) for w, i in zip(words, infos))
        results.append(CheckResult("systematic", "pass" if ok else "fail",
                                   f"information block read back ({scope})"))

    expected = pc.row.base.min_distance * pc.col.base.min_distance
    if pc.p**pc.dimension <= DISTANCE_LIMIT:
        got = min_pairwise_distance(codeword_array(pc)) if pc.dimension else expected
        results.append(CheckResult("distance", "pass" if got == expected else "fail",
                                   f"minimum distance {got}, expected {expected}"))
    else:
        results.append(CheckResult("distance", "skipped",
                                   f"{pc.p}^{pc.dimension} codewords; expected {expected}"))

    if pc.p**pc.dimension <= EXHAUSTIVE_LIMIT:
        wb = weight_bounds_report(pc)
        detail = f"rows {wb.row_min}..{wb.row_max}, columns {wb.col_min}..{wb.col_max}"
        target = weight_guarantee(pc)
        if target is None:
            results.append(CheckResult("weight-bounds", "pass", detail + " (no guarantee claimed)"))
        else:
            ok = wb.within(*target)
            results.append(CheckResult("weight-bounds", "pass" if ok else "fail",
                                       detail + f"; guaranteed rows {target[0]}..{target[1]}, "
                                       f"columns {target[2]}..{target[3]}"))
    else:
        results.append(CheckResult("weight-bounds", "skipped", "code too large to enumerate"))
    return results
