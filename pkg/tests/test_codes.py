import threading

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affprod.codes import (
    LinearCode,
    even_weight,
    family,
    full_space,
    hyperplane_between,
    reed_muller_1,
    repetition,
)
from affprod.errors import EqualDimensions, NotNested, RankDeficient, ShapeMismatch, TooLargeToEnumerate
from oracles import coset, min_weight, span

EVEN7 = even_weight(7)
FAMILY_CASES = [
    (even_weight(2), 2, 1, 2), (even_weight(4), 4, 3, 2), (EVEN7, 7, 6, 2),
    (repetition(1), 1, 1, 1), (repetition(4), 4, 1, 4), (repetition(9), 9, 1, 9),
    (reed_muller_1(1), 2, 2, 1), (reed_muller_1(2), 4, 3, 2), (reed_muller_1(3), 8, 4, 4),
    (reed_muller_1(4), 16, 5, 8),
]


@pytest.mark.parametrize("code,n,k,d", FAMILY_CASES, ids=lambda c: getattr(c, "name", None))
def test_family_parameters_match_enumeration(code, n, k, d):
    assert (code.n, code.k) == (n, k)
    assert code.min_distance == d
    assert min_weight(span(code.generator)) == d
    assert code.is_self_complementary() == (tuple([1] * n) in span(code.generator))


def test_odd_length_even_weight_code_lacks_all_one_word():
    assert not even_weight(7).is_self_complementary()
    assert all(c.is_self_complementary() for c, *_ in FAMILY_CASES if c is not EVEN7)


def test_full_space():
    c = full_space(5)
    assert (c.n, c.k, c.min_distance) == (5, 5, 1)
    assert c.is_self_complementary()


def test_reed_muller_generator_layout():
    g = reed_muller_1(2).generator
    assert g.tolist() == [[1, 1, 1, 1], [0, 0, 1, 1], [0, 1, 0, 1]]


def test_repetition_words():
    assert {tuple(w) for w in repetition(4).codewords()} == {(0, 0, 0, 0), (1, 1, 1, 1)}


def test_family_dispatch():
    assert family("even_weight", n=4).k == 3
    assert family("reed_muller_1", r=3).n == 8
    with pytest.raises(ValueError):
        family("golay", n=23)
    with pytest.raises(ValueError):
        family("repetition", r=3)
    with pytest.raises(ValueError):
        family("even_weight", n=1)


def test_contains_examples():
    c = even_weight(4)
    assert c.contains([1, 1, 0, 0])
    assert not c.contains([1, 0, 0, 0])
    assert c.contains([0, 0, 0, 0])
    with pytest.raises(ShapeMismatch):
        c.contains([1, 1])


def test_contains_agrees_with_span():
    c = LinearCode([[1, 1, 0, 1, 0], [0, 1, 1, 0, 1]])
    words = span(c.generator)
    for x in range(32):
        w = [(x >> i) & 1 for i in range(5)]
        assert c.contains(w) == (tuple(w) in words)


def test_self_complementary_examples():
    assert even_weight(4).is_self_complementary()
    assert repetition(4).is_self_complementary()
    assert not LinearCode([[1, 0, 0, 0]]).is_self_complementary()


def test_min_distance_guard():
    big = LinearCode(np.eye(25, dtype=int))
    with pytest.raises(TooLargeToEnumerate):
        big.min_distance


def test_min_distance_computed_once_under_threads():
    c = reed_muller_1(4)
    results = []
    threads = [threading.Thread(target=lambda: results.append(c.min_distance)) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [8] * 8


def test_rank_deficient_generator_rejected():
    with pytest.raises(RankDeficient):
        LinearCode([[1, 1, 0], [1, 1, 0]])
    assert LinearCode.spanned_by([[1, 1, 0], [1, 1, 0]]).k == 1


def _canonical_by_enumeration(code, u):
    """Coset member that is zero on the information set, found by scanning the coset."""
    info = list(code.information_set)
    hits = [w for w in coset(code.generator, u, code.p) if not any(w[i] for i in info)]
    assert len(hits) == 1
    return hits[0]


def test_coset_representative_examples():
    c = LinearCode([[1, 1, 1, 1], [1, 0, 1, 0]])
    assert c.coset_representative([0, 0, 1, 1]).tolist() == [0, 0, 1, 1]
    assert not even_weight(4).coset_representative([0, 0, 0, 0]).any()
    rep = even_weight(4).coset_representative([1, 0, 0, 0])
    assert rep.tolist() == [0, 0, 0, 1]
    assert tuple(rep) == _canonical_by_enumeration(even_weight(4), [1, 0, 0, 0])


CODES_FOR_COSETS = [even_weight(5), reed_muller_1(3), repetition(4),
                    LinearCode([[1, 1, 0, 0, 1], [0, 0, 1, 1, 1]]),
                    LinearCode([[1, 2, 0, 1], [0, 1, 1, 2]], p=3)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CODES_FOR_COSETS), st.data())
def test_coset_representative_is_canonical(code, data):
    u = data.draw(st.lists(st.integers(0, code.p - 1), min_size=code.n, max_size=code.n))
    x = data.draw(st.lists(st.integers(0, code.p - 1), min_size=code.k, max_size=code.k))
    c = code.encode(x)
    rep = code.coset_representative(u)
    assert np.array_equal(rep, code.coset_representative((np.array(u) + c) % code.p))
    assert tuple(rep) == _canonical_by_enumeration(code, u)
    assert code.contains((np.array(u) - rep) % code.p)


def _check_hyperplane(c1, c2):
    c3, u = hyperplane_between(c1, c2)
    w1, w2, w3 = span(c1.generator), span(c2.generator), span(c3.generator)
    assert w1 <= w3 < w2
    assert c3.k == c2.k - 1
    assert tuple(u) in w2 and tuple(u) not in w3
    return c3, u


def test_hyperplane_even_weight():
    c3, _ = _check_hyperplane(repetition(4), even_weight(4))
    assert c3.k == 2 and c3.is_self_complementary()


def test_hyperplane_reed_muller():
    c3, _ = _check_hyperplane(repetition(8), reed_muller_1(3))
    assert c3.k == 3 and c3.contains(np.ones(8, dtype=int))


def test_hyperplane_forced_when_codimension_one():
    c1 = LinearCode([[1, 1, 1, 1], [1, 0, 1, 0]])
    c3, _ = _check_hyperplane(c1, even_weight(4))
    assert span(c3.generator) == span(c1.generator)


@pytest.mark.parametrize("c1,c2", [
    (repetition(4), full_space(4)), (even_weight(4), full_space(4)),
    (repetition(8), even_weight(8)), (reed_muller_1(3), even_weight(8)),
    (repetition(16), reed_muller_1(4)), (repetition(2), reed_muller_1(1)),
])
def test_hyperplane_on_family_pairs(c1, c2):
    _check_hyperplane(c1, c2)


def test_hyperplane_is_deterministic():
    a = hyperplane_between(repetition(8), reed_muller_1(3))
    b = hyperplane_between(repetition(8), reed_muller_1(3))
    assert np.array_equal(a[0].generator, b[0].generator) and np.array_equal(a[1], b[1])


def test_hyperplane_errors():
    with pytest.raises(NotNested):
        hyperplane_between(LinearCode([[1, 0, 0, 0]]), even_weight(4))
    with pytest.raises(EqualDimensions):
        hyperplane_between(even_weight(4), even_weight(4))
