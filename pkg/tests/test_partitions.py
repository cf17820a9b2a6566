from math import comb

import pytest
from hypothesis import given, strategies as st

from fcaffine.partitions import (
    Partition, box_partitions, distinct_partitions, durfee_decompose, durfee_recompose,
    fits_box, size_polynomial, staircase_bijection, staircase_inverse,
)
from fcaffine.qseries import gauss_binomial, neg_q_pochhammer

partitions = st.lists(st.integers(1, 9), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_partition_validation():
    assert Partition((3, 1, 1)).size == 5
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@pytest.mark.parametrize("k,w", [(0, 3), (2, 2), (3, 4), (4, 1)])
def test_box_partitions_count(k, w):
    parts = box_partitions(k, w)
    assert len(parts) == comb(k + w, k)
    assert len(set(parts)) == len(parts)
    assert all(fits_box(p, k, w) for p in parts)


@given(partitions)
def test_durfee_round_trip(lam):
    a, b = len(lam), (lam[0] if lam else 0)
    k, left, right = durfee_decompose(lam, a, b)
    assert fits_box(left, a - k, k) and fits_box(right, k, b - k)
    assert lam.size == k * k + left.size + right.size
    assert durfee_recompose(k, left, right) == lam


def test_durfee_rejects_oversized():
    with pytest.raises(ValueError):
        durfee_decompose(Partition((4,)), 1, 3)


@given(st.sets(st.integers(1, 12)))
def test_staircase_round_trip(parts):
    lam = Partition(sorted(parts, reverse=True))
    k, mu = staircase_bijection(lam, 12)
    assert k == len(lam)
    assert fits_box(mu, k, 12 - k)
    assert lam.size == mu.size + k * (k + 1) // 2
    assert staircase_inverse(k, mu) == lam


def test_staircase_rejects_repeats_and_large_parts():
    with pytest.raises(ValueError):
        staircase_bijection(Partition((2, 2)), 3)
    with pytest.raises(ValueError):
        staircase_bijection(Partition((5,)), 3)


@pytest.mark.parametrize("n", range(10))
def test_distinct_partitions_generate_pochhammer(n):
    assert size_polynomial(distinct_partitions(n)) == neg_q_pochhammer(n)


@pytest.mark.parametrize("a,b", [(3, 4), (5, 5), (2, 7)])
def test_durfee_identity_by_enumeration(a, b):
    # grouping box partitions by Durfee side reproduces the q-binomial sum
    by_k = {}
    for lam in box_partitions(a, b):
        k, _, _ = durfee_decompose(lam, a, b)
        by_k.setdefault(k, []).append(lam)
    for k, group in by_k.items():
        expect = (gauss_binomial(a, k) * gauss_binomial(b, k)).shift(k * k)
        assert size_polynomial(group) == expect
