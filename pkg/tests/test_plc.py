import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affprod.affine import AffineCode
from affprod.algebra import ERASED
from affprod.codes import LinearCode, even_weight, reed_muller_1, repetition
from affprod.errors import DecodeFailure, PreconditionError, ShapeMismatch
from affprod.plc import (
    DecoderOptions,
    NoiseConfig,
    NoiseEvents,
    apply_events,
    apply_noise,
    decode,
    detect_erasures,
    draw_events,
    gabidulin_comparison,
    guaranteed_correctable,
    make_rng,
    simulate,
    splitmix64,
    trial_seed,
    weight_bounds_report,
)
from affprod.product import classical_product, codeword_array, construction_I, construction_IA
from oracles import apply_channel, consistent_codewords

C3 = LinearCode([[1, 1, 1, 1], [1, 0, 1, 0]])
WEIGHT2 = construction_I(AffineCode(C3, [0, 0, 1, 1]), AffineCode(C3, [0, 0, 1, 1]))
WEIGHT2_WORDS = codeword_array(WEIGHT2)
IA_EVEN4 = construction_IA(repetition(4), even_weight(4), repetition(4), even_weight(4))
IA_RM3 = construction_IA(repetition(8), reed_muller_1(3), repetition(8), reed_muller_1(3))
SAMPLE = np.array([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]])


def test_splitmix64_reference_vector():
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert trial_seed(0, 0) == splitmix64(0)
    assert len({trial_seed(42, t) for t in range(1000)}) == 1000


def test_rng_is_reproducible():
    assert np.array_equal(make_rng(7).integers(0, 100, 20), make_rng(7).integers(0, 100, 20))


def test_noiseless_channel():
    received, events = apply_noise(SAMPLE, NoiseConfig())
    assert np.array_equal(received, SAMPLE)
    assert events == NoiseEvents()


def test_narrowband_and_impulse_example():
    events = NoiseEvents(narrowband=(2,), impulse=(2,))
    expected = [[1, 0, 1, 1], [0, 1, 1, 0], [1, 1, 1, 1], [1, 0, 1, 1]]
    assert apply_events(SAMPLE, events).tolist() == expected
    assert apply_channel(SAMPLE, narrowband=[2], impulse=[2]).tolist() == expected


def test_narrowband_row_is_all_one():
    received, events = apply_noise(SAMPLE, NoiseConfig(e_nbd=1, seed=5))
    assert received[events.narrowband[0]].tolist() == [1, 1, 1, 1]


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2), st.integers(0, 4), st.integers(0, 2), st.integers(0, 16),
       st.integers(0, 2**64 - 1))
def test_apply_noise_matches_reference_channel(e_nbd, e_imp, e_fade, e_bg, seed):
    cfg = NoiseConfig(e_nbd, e_imp, e_fade, e_bg, seed)
    received, ev = apply_noise(SAMPLE, cfg)
    assert (len(ev.narrowband), len(ev.impulse), len(ev.fade), len(ev.background)) == (
        e_nbd, e_imp, e_fade, e_bg)
    assert not set(ev.narrowband) & set(ev.fade)
    assert len(set(ev.background)) == e_bg
    assert np.array_equal(received, apply_channel(SAMPLE, ev.narrowband, ev.impulse, ev.fade,
                                                  ev.background))
    again, ev2 = apply_noise(SAMPLE, cfg)
    assert ev2 == ev and np.array_equal(again, received)


def test_noise_config_validation():
    with pytest.raises(PreconditionError):
        NoiseConfig(e_nbd=3, e_fade=2).validate(4, 4)
    with pytest.raises(PreconditionError):
        NoiseConfig(e_imp=5).validate(4, 4)
    with pytest.raises(PreconditionError):
        NoiseConfig(e_bg=17).validate(4, 4)
    with pytest.raises(PreconditionError):
        NoiseConfig(e_nbd=-1).validate(4, 4)


def test_decode_noiseless():
    for w in WEIGHT2_WORDS:
        assert np.array_equal(decode(w, WEIGHT2), w)


def test_decode_example():
    received = apply_events(SAMPLE, NoiseEvents(narrowband=(2,), impulse=(2,)))
    matches = consistent_codewords(detect_erasures(received).marked, WEIGHT2_WORDS)
    assert [m.tolist() for m in matches] == [SAMPLE.tolist()]
    assert decode(received, WEIGHT2).tolist() == SAMPLE.tolist()


def test_decode_reports_ambiguity_on_min_weight_support():
    # 1010 is a weight-2 word of the row base, so erasing columns 0 and 2 is fatal.
    received = apply_events(SAMPLE, NoiseEvents(impulse=(0, 2)))
    assert len(consistent_codewords(detect_erasures(received).marked, WEIGHT2_WORDS)) >= 2
    with pytest.raises(DecodeFailure) as info:
        decode(received, WEIGHT2)
    assert info.value.kind == "ambiguous"
    assert info.value.location.startswith(("row:", "column:"))


def test_decode_reports_inconsistency():
    received = SAMPLE.copy()
    received[0, 0] ^= 1
    with pytest.raises(DecodeFailure) as info:
        decode(received, WEIGHT2, DecoderOptions(background_radius=0))
    assert info.value.kind == "inconsistent"


def test_decode_shape_checked():
    with pytest.raises(ShapeMismatch):
        decode(np.zeros((3, 4)), WEIGHT2)


@settings(max_examples=250, deadline=None)
@given(st.integers(0, 15), st.sets(st.integers(0, 3), max_size=4),
       st.sets(st.integers(0, 3), max_size=4))
def test_decoder_fails_exactly_when_erasures_leave_several_codewords(index, rows, cols):
    sent = WEIGHT2_WORDS[index]
    received = apply_events(sent, NoiseEvents(narrowband=tuple(sorted(rows)),
                                              impulse=tuple(sorted(cols))))
    matches = consistent_codewords(detect_erasures(received).marked, WEIGHT2_WORDS)
    assert any(np.array_equal(m, sent) for m in matches)
    if len(matches) == 1:
        assert np.array_equal(decode(received, WEIGHT2), sent)
    else:
        with pytest.raises(DecodeFailure):
            decode(received, WEIGHT2)


def _guaranteed_region_holds(pc, words, max_cases=None, seed=0):
    d_row, d_col = pc.row.base.min_distance, pc.col.base.min_distance
    gammas = [g for s in range(d_col) for g in itertools.combinations(range(pc.m), s)]
    pis = [p for s in range(d_row) for p in itertools.combinations(range(pc.n), s)]
    cases = list(itertools.product(range(len(words)), gammas, pis))
    if max_cases is not None and len(cases) > max_cases:
        rng = np.random.default_rng(seed)
        cases = [cases[i] for i in rng.choice(len(cases), max_cases, replace=False)]
    for idx, gamma, pi in cases:
        assert guaranteed_correctable(pc, len(gamma), len(pi))
        received = apply_channel(words[idx], narrowband=gamma, impulse=pi)
        assert np.array_equal(decode(received, pc), words[idx])


def test_guaranteed_region_weight_two_code_exhaustive():
    _guaranteed_region_holds(WEIGHT2, WEIGHT2_WORDS)


def test_guaranteed_region_even_weight_expurgated_exhaustive():
    _guaranteed_region_holds(IA_EVEN4, codeword_array(IA_EVEN4))


def test_guaranteed_region_mixed_lengths():
    pc = construction_IA(repetition(4), even_weight(4), repetition(6), even_weight(6))
    _guaranteed_region_holds(pc, codeword_array(pc), max_cases=3000)


def test_guaranteed_region_reed_muller_sampled():
    _guaranteed_region_holds(IA_RM3, codeword_array(IA_RM3), max_cases=1500, seed=1)


def test_guaranteed_correctable_boundary():
    assert guaranteed_correctable(WEIGHT2, 1, 1)
    assert not guaranteed_correctable(WEIGHT2, 1, 2)
    assert not guaranteed_correctable(WEIGHT2, 2, 0)


@pytest.mark.parametrize("pc", [WEIGHT2, IA_EVEN4, IA_RM3], ids=["weight2", "ia4", "ia8"])
def test_clean_codewords_never_trigger_the_detector(pc):
    words = codeword_array(pc)
    for w in words:
        assert 0 < w.sum(axis=1).min() and w.sum(axis=1).max() < pc.n
        assert 0 < w.sum(axis=0).min() and w.sum(axis=0).max() < pc.m
        det = detect_erasures(w, DecoderOptions(mark_fades=True))
        assert not (det.marked == ERASED).any()


def test_weight_bounds_examples():
    assert tuple(weight_bounds_report(WEIGHT2).__dict__.values()) == (2, 2, 2, 2)
    assert tuple(weight_bounds_report(IA_RM3).__dict__.values()) == (4, 4, 4, 4)
    classical = classical_product(even_weight(4), even_weight(4))
    assert tuple(weight_bounds_report(classical).__dict__.values()) == (0, 4, 0, 4)


def test_background_noise_corrected_by_bounded_distance_passes():
    report = simulate(IA_RM3, NoiseConfig(e_bg=1), 200, 9)
    assert report.success_rate == 1.0
    off = simulate(IA_RM3, NoiseConfig(e_bg=1), 200, 9, DecoderOptions(background_radius=0))
    assert off.success_rate == 0.0


def test_fade_marking_never_hurts():
    for pc, e_fade in ((WEIGHT2, 1), (IA_RM3, 2), (IA_RM3, 3)):
        for seed in range(3):
            cfg = NoiseConfig(e_fade=e_fade)
            base = simulate(pc, cfg, 100, seed)
            marked = simulate(pc, cfg, 100, seed, DecoderOptions(mark_fades=True))
            assert marked.success_rate >= base.success_rate
    assert simulate(IA_RM3, NoiseConfig(e_fade=3), 100, 0,
                    DecoderOptions(mark_fades=True)).success_rate == 1.0


def test_simulate_success_rates():
    assert simulate(WEIGHT2, NoiseConfig(), 50, 0).success_rate == 1.0
    assert simulate(WEIGHT2, NoiseConfig(1, 1), 1000, 42).success_rate == 1.0
    assert simulate(IA_RM3, NoiseConfig(3, 3), 300, 42).success_rate == 1.0


def test_simulate_failures_are_reported():
    report = simulate(WEIGHT2, NoiseConfig(e_imp=2), 200, 1)
    assert 0 < report.successes < 200
    assert report.histogram["ambiguous"] == len(report.failures)
    assert all(f["kind"] == "ambiguous" for f in report.failures)


def test_spurious_detection_counted():
    report = simulate(WEIGHT2, NoiseConfig(e_bg=6), 300, 3)
    assert report.histogram["spurious_detection"] > 0


def test_simulate_is_deterministic_and_prefix_stable():
    a = simulate(WEIGHT2, NoiseConfig(1, 2), 100, 5)
    b = simulate(WEIGHT2, NoiseConfig(1, 2), 100, 5)
    assert a.to_json() == b.to_json()
    short = simulate(WEIGHT2, NoiseConfig(1, 2), 40, 5)
    assert short.seeds == a.seeds[:40]
    assert short.failures == [f for f in a.failures if f["trial"] < 40]
    c = simulate(WEIGHT2, NoiseConfig(1, 2), 100, 6)
    assert c.seeds != a.seeds
    data = json.loads(a.to_json())
    assert set(data) >= {"success_rate", "failures", "histogram", "seeds", "trials"}


def test_simulate_rejects_zero_trials():
    with pytest.raises(ValueError):
        simulate(WEIGHT2, NoiseConfig(), 0, 0)


def test_draw_events_uses_given_generator():
    a = draw_events(NoiseConfig(1, 1, 1, 3), 4, 4, make_rng(11))
    b = draw_events(NoiseConfig(1, 1, 1, 3), 4, 4, make_rng(11))
    assert a == b


def test_gabidulin_table():
    rows = [(r.r, r.product_dim, r.gabidulin_dim) for r in gabidulin_comparison(3, 7)]
    assert rows == [(3, 9, 4), (4, 16, 8), (5, 25, 16), (6, 36, 32), (7, 49, 64)]
    for r in range(1, 12):
        n = 2 ** (r - 1)
        row = gabidulin_comparison(r, r)[0]
        assert row.product_dim == r * r and row.gabidulin_dim == n * (n - n + 1)
    with pytest.raises(ValueError):
        gabidulin_comparison(0, 3)


def test_product_dimension_matches_construction():
    for r in (2, 3, 4):
        rm = reed_muller_1(r)
        pc = construction_IA(repetition(2**r), rm, repetition(2**r), rm)
        assert pc.dimension == gabidulin_comparison(r, r)[0].product_dim
