from math import comb

import pytest
from hypothesis import given, strategies as st

from fcaffine.paths import (
    G_poly, G_poly_enumerated, LatticePath, O_poly, O_poly_enumerated, Step, csp_verify,
    enumerate_G, enumerate_O, rotate,
)
from fcaffine.qseries import gauss_binomial, neg_q_pochhammer, residue_sums

paths = st.lists(st.sampled_from(list(Step)), min_size=1, max_size=12).map(lambda s: LatticePath(tuple(s)))


def test_path_statistics():
    p = LatticePath((Step.U, Step.H1, Step.D, Step.D))
    assert p.heights == (1, 2, 2, 1, 0)
    assert not p.closed
    assert p.area == 6 and p.height_sum == 6
    assert str(p) == "UH1DD"
    q = LatticePath((Step.U, Step.D))
    assert q.closed and q.area == 1 and q.height_sum == 1


@given(paths)
def test_heights_touch_zero(p):
    assert min(p.heights) == 0 and len(p.heights) == p.n + 1
    assert p.height_sum == p.area + p.heights[-1]


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(enumerate_O(n)) == comb(2 * n, n)
    assert len(enumerate_G(n)) == 4 ** n
    assert all(p.closed for p in enumerate_O(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_transfer_matrix_agrees_with_enumeration(n):
    assert O_poly(n) == O_poly_enumerated(n)
    assert G_poly(n) == G_poly_enumerated(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_path_congruences(n):
    assert residue_sums(O_poly(n), n) == residue_sums(gauss_binomial(2 * n, n), n)
    assert residue_sums(G_poly(n), n + 1) == residue_sums(neg_q_pochhammer(n) ** 2, n + 1)


@given(paths)
def test_rotation(p):
    if not p.closed:
        with pytest.raises(ValueError):
            rotate(p)
        return
    r = p
    for _ in range(p.n):
        r = rotate(r)
        assert r.closed
    assert r == p


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 10])
def test_cyclic_sieving(n):
    rows = csp_verify(n)
    assert len(rows) == n
    assert all(r.ok for r in rows)
    assert rows[0].fixed_points == comb(2 * n, n)


def test_invalid_lengths():
    for f in (O_poly, G_poly, enumerate_O, enumerate_G):
        with pytest.raises(ValueError):
            f(0)
