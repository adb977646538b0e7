"""Power-line channel model, the erasure-based product decoder and a Monte Carlo harness.

A codeword is an ``m x n`` binary matrix: row ``i`` is a frequency slot and
column ``j`` a time slot.  The channel has four kinds of events:

* narrowband noise forces a whole row to ones,
* impulse noise forces a whole column to ones,
* a fade forces a whole row to zeros,
* background noise flips single cells.

They are applied in the fixed order background, fade, narrowband, impulse.
All indices are zero-based.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

import numpy as np

from .affine import AffineCode
from .algebra import ERASED
from .errors import (
    Ambiguous,
    BoundedDistanceFailure,
    DecodeFailure,
    Inconsistent,
    PreconditionError,
    ShapeMismatch,
)
from .product import ProductCode, iter_codeword_blocks

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """One output of the SplitMix64 finalizer applied to state ``x``."""
    z = (x + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial: int) -> int:
    """Seed of trial ``trial``: SplitMix64 of ``master + trial * gamma`` (mod 2^64)."""
    return splitmix64((master_seed + trial * GOLDEN_GAMMA) & MASK64)


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; identical streams on every platform for a given seed."""
    return np.random.Generator(np.random.PCG64(seed & MASK64))


@dataclass(frozen=True)
class NoiseConfig:
    """Event counts for one channel use."""

    e_nbd: int = 0
    e_imp: int = 0
    e_fade: int = 0
    e_bg: int = 0
    seed: int = 0

    def validate(self, m: int, n: int):
        counts = (self.e_nbd, self.e_imp, self.e_fade, self.e_bg)
        if min(counts) < 0:
            raise PreconditionError("event counts must be nonnegative")
        if self.e_nbd + self.e_fade > m:
            raise PreconditionError(f"e_nbd + e_fade = {self.e_nbd + self.e_fade} exceeds {m} rows")
        if self.e_imp > n:
            raise PreconditionError(f"e_imp = {self.e_imp} exceeds {n} columns")
        if self.e_bg > m * n:
            raise PreconditionError(f"e_bg = {self.e_bg} exceeds {m * n} cells")


@dataclass(frozen=True)
class NoiseEvents:
    narrowband: tuple[int, ...] = ()
    impulse: tuple[int, ...] = ()
    fade: tuple[int, ...] = ()
    background: tuple[tuple[int, int], ...] = ()


def draw_events(cfg: NoiseConfig, m: int, n: int, rng: np.random.Generator) -> NoiseEvents:
    """Draw event sets uniformly without replacement.

    Narrowband and fade rows come from one permutation so they are disjoint.
    """
    cfg.validate(m, n)
    rows = rng.permutation(m)[: cfg.e_nbd + cfg.e_fade]
    cols = rng.permutation(n)[: cfg.e_imp]
    cells = rng.permutation(m * n)[: cfg.e_bg]
    return NoiseEvents(
        narrowband=tuple(sorted(int(i) for i in rows[: cfg.e_nbd])),
        impulse=tuple(sorted(int(j) for j in cols)),
        fade=tuple(sorted(int(i) for i in rows[cfg.e_nbd:])),
        background=tuple(sorted((int(c) // n, int(c) % n) for c in cells)),
    )


def apply_events(codeword, events: NoiseEvents) -> np.ndarray:
    out = np.array(codeword, dtype=np.int64)
    for i, j in events.background:
        out[i, j] ^= 1
    out[list(events.fade), :] = 0
    out[list(events.narrowband), :] = 1
    out[:, list(events.impulse)] = 1
    return out


def apply_noise(codeword, cfg: NoiseConfig) -> tuple[np.ndarray, NoiseEvents]:
    """Pass a binary codeword through the channel; returns the detector output and the events."""
    codeword = np.asarray(codeword, dtype=np.int64)
    m, n = codeword.shape
    events = draw_events(cfg, m, n, make_rng(cfg.seed))
    return apply_events(codeword, events), events


@dataclass(frozen=True)
class DecoderOptions:
    """Decoder switches.

    Attributes:
        mark_fades: also treat all-zero rows as erasures (off by default).
        background_radius: bounded-distance radius for the component decoders;
            ``None`` uses ``(d - 1) // 2`` of each base code, ``0`` disables
            the background-noise passes.
        max_iters: cap on alternating row/column bounded-distance passes.
    """

    mark_fades: bool = False
    background_radius: int | None = None
    max_iters: int = 10


@dataclass(frozen=True)
class Detection:
    marked: np.ndarray
    narrowband_rows: tuple[int, ...]
    fade_rows: tuple[int, ...]
    impulse_cols: tuple[int, ...]


def detect_erasures(received, options: DecoderOptions | None = None) -> Detection:
    """Mark all-one rows, then columns made only of ones and erasures, as erased."""
    options = options or DecoderOptions()
    r = np.array(received, dtype=np.int64)
    nbd = tuple(int(i) for i in np.flatnonzero((r == 1).all(axis=1)))
    r[list(nbd), :] = ERASED
    fades: tuple[int, ...] = ()
    if options.mark_fades:
        fades = tuple(int(i) for i in np.flatnonzero((r == 0).all(axis=1)))
        r[list(fades), :] = ERASED
    imp = tuple(int(j) for j in np.flatnonzero(((r == 1) | (r == ERASED)).all(axis=0)))
    r[:, list(imp)] = ERASED
    return Detection(r, nbd, fades, imp)


def _radii(pc: ProductCode, options: DecoderOptions) -> tuple[int, int]:
    if options.background_radius is not None:
        return options.background_radius, options.background_radius
    return (pc.row.base.min_distance - 1) // 2, (pc.col.base.min_distance - 1) // 2


def _bounded_distance_passes(work, row_code, col_code, r_row, r_col, max_iters):
    for _ in range(max_iters):
        changed = False
        for lines, code, radius in ((work.T, col_code, r_col), (work, row_code, r_row)):
            if radius <= 0:
                continue
            for line in lines:
                if (line == ERASED).any():
                    continue
                try:
                    fixed = code.bounded_distance_decode(line, radius)
                except BoundedDistanceFailure:
                    continue
                if not np.array_equal(fixed, line):
                    line[:] = fixed
                    changed = True
        if not changed:
            return


def _erasure_passes(work, row_code, col_code):
    while (work == ERASED).any():
        progress = False
        for lines, code, axis in ((work.T, col_code, "column"), (work, row_code, "row")):
            for idx, line in enumerate(lines):
                if not (line == ERASED).any():
                    continue
                try:
                    line[:] = code.erasure_decode(line)
                except Ambiguous:
                    continue
                except Inconsistent:
                    raise DecodeFailure("inconsistent", axis, idx) from None
                progress = True
        if not progress:
            rows = np.flatnonzero((work == ERASED).any(axis=1))
            raise DecodeFailure("ambiguous", "row", int(rows[0]))


def decode(received, pc: ProductCode, options: DecoderOptions | None = None) -> np.ndarray:
    """Recover a codeword of ``pc`` from the detector output.

    Erases narrowband rows and impulse columns, subtracts the coset leader on
    the remaining cells, then decodes against the linear base codes: optional
    bounded-distance passes for background noise, followed by alternating
    column/row erasure filling.  The leader is added back on return.

    Raises:
        DecodeFailure: with ``kind`` ``"ambiguous"`` or ``"inconsistent"`` and
            the first row or column that could not be resolved.
    """
    options = options or DecoderOptions()
    received = np.asarray(received, dtype=np.int64)
    if received.shape != pc.shape:
        raise ShapeMismatch(f"received shape {received.shape} != code shape {pc.shape}")
    work = detect_erasures(received, options).marked
    known = work != ERASED
    work[known] = (work[known] - pc.leader[known]) % pc.p
    row_code, col_code = AffineCode(pc.row.base), AffineCode(pc.col.base)

    r_row, r_col = _radii(pc, options)
    if r_row > 0 or r_col > 0:
        _bounded_distance_passes(work, row_code, col_code, r_row, r_col, options.max_iters)
    _erasure_passes(work, row_code, col_code)

    for j, column in enumerate(work.T):
        if not pc.col.base.contains(column):
            raise DecodeFailure("inconsistent", "column", j)
    for i, row in enumerate(work):
        if not pc.row.base.contains(row):
            raise DecodeFailure("inconsistent", "row", i)
    return (work + pc.leader) % pc.p


def guaranteed_correctable(pc: ProductCode, e_nbd: int, e_imp: int) -> bool:
    """Whether erasure decoding provably succeeds: ``e_imp < d_row`` and ``e_nbd < d_col``."""
    return e_imp < pc.row.base.min_distance and e_nbd < pc.col.base.min_distance


@dataclass
class SimulationReport:
    trials: int
    master_seed: int
    successes: int
    failures: list[dict] = field(default_factory=list)
    histogram: dict[str, int] = field(default_factory=dict)
    seeds: list[int] = field(default_factory=list)

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials

    def to_dict(self) -> dict:
        out = asdict(self)
        out["success_rate"] = self.success_rate
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)


def _spurious(det: Detection, events: NoiseEvents) -> bool:
    rows = set(det.narrowband_rows) | set(det.fade_rows)
    return bool(rows - set(events.narrowband) - set(events.fade)
                or set(det.impulse_cols) - set(events.impulse))


def simulate(pc: ProductCode, template: NoiseConfig, trials: int, master_seed: int,
             options: DecoderOptions | None = None) -> SimulationReport:
    """Run ``trials`` independent encode / channel / decode rounds.

    Trial ``t`` draws its message and its events from ``make_rng(trial_seed(master_seed, t))``,
    so the report depends only on the arguments, not on execution order.
    ``template.seed`` is ignored.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    options = options or DecoderOptions()
    template.validate(pc.m, pc.n)
    report = SimulationReport(trials, master_seed, 0)
    hist = {"ambiguous": 0, "inconsistent": 0, "miscorrection": 0, "spurious_detection": 0}
    for t in range(trials):
        seed = trial_seed(master_seed, t)
        report.seeds.append(seed)
        rng = make_rng(seed)
        sent = pc.encode(rng.integers(0, pc.p, size=(pc.l, pc.k)))
        events = draw_events(template, pc.m, pc.n, rng)
        received = apply_events(sent, events)
        if _spurious(detect_erasures(received, options), events):
            hist["spurious_detection"] += 1
        try:
            got = decode(received, pc, options)
        except DecodeFailure as exc:
            hist[exc.kind] += 1
            report.failures.append({"trial": t, "kind": exc.kind, "location": exc.location})
            continue
        if np.array_equal(got, sent):
            report.successes += 1
        else:
            i, j = np.argwhere(got != sent)[0]
            hist["miscorrection"] += 1
            report.failures.append({"trial": t, "kind": "miscorrection", "location": f"cell:{i},{j}"})
    report.histogram = hist
    return report


@dataclass(frozen=True)
class WeightBounds:
    row_min: int
    row_max: int
    col_min: int
    col_max: int

    def within(self, row_lo: int, row_hi: int, col_lo: int, col_hi: int) -> bool:
        return (row_lo <= self.row_min and self.row_max <= row_hi
                and col_lo <= self.col_min and self.col_max <= col_hi)


def weight_bounds(blocks: Iterable[np.ndarray]) -> WeightBounds:
    """Extreme row and column weights over batches of ``(B, m, n)`` matrices."""
    rmin = cmin = 1 << 62
    rmax = cmax = -1
    for block in blocks:
        rw = np.count_nonzero(block, axis=2)
        cw = np.count_nonzero(block, axis=1)
        rmin, rmax = min(rmin, int(rw.min())), max(rmax, int(rw.max()))
        cmin, cmax = min(cmin, int(cw.min())), max(cmax, int(cw.max()))
    return WeightBounds(rmin, rmax, cmin, cmax)


def weight_bounds_report(pc: ProductCode) -> WeightBounds:
    return weight_bounds(iter_codeword_blocks(pc))


@dataclass(frozen=True)
class ComparisonRow:
    r: int
    product_dim: int
    gabidulin_dim: int

    @property
    def size(self) -> int:
        """Side length ``2^r`` of the square matrices of both constructions."""
        return 2**self.r


def gabidulin_comparison(r_min: int, r_max: int) -> list[ComparisonRow]:
    """Dimensions of the Reed-Muller Construction IA code and the rank-metric code.

    The Reed-Muller code ``[2^r, r+1, 2^(r-1)]`` gives dimension ``r^2``.  The
    rank-metric construction with ``n = d = 2^(r-1)`` has ``k = n - d + 1 = 1``
    and dimension ``n k = 2^(r-1)``.
    """
    if r_min < 1 or r_max < r_min:
        raise ValueError("need 1 <= r_min <= r_max")
    rows = []
    for r in range(r_min, r_max + 1):
        n = d = 2 ** (r - 1)
        rows.append(ComparisonRow(r, r * r, n * (n - d + 1)))
    return rows
