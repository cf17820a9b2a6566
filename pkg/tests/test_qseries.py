import cmath
from math import comb

import pytest
from hypothesis import given, strategies as st

from fcaffine.partitions import box_partitions, size_polynomial
from fcaffine.qseries import (
    InconclusiveError, Poly, PrecisionError, QuasiRational, eval_at_root, expand,
    gauss_binomial, neg_q_pochhammer, partial_fraction_coeffs, poly_add, poly_mul,
    qbinom_formula_check, residue_sums, round_exact, tail_min_period,
)

polys = st.lists(st.integers(-50, 50), max_size=8).map(lambda c: Poly(tuple(c)))


def test_poly_products():
    assert poly_mul(Poly((1, 1)), Poly((1, 1))) == Poly((1, 2, 1))
    assert poly_mul(Poly((3, 4)), Poly()) == Poly()
    # (1+q)(1+q^2) expanded by hand
    assert poly_mul(Poly((1, 1)), Poly((1, 0, 1))) == Poly((1, 1, 1, 1))


def test_trimming_and_degree():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)).degree == -1
    assert Poly.monomial(3, 5) == Poly((0, 0, 0, 5))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert poly_add(a, b) == poly_add(b, a)
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_ring_map(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


def test_gauss_binomial_examples():
    assert gauss_binomial(5, 0) == Poly((1,))
    assert gauss_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert gauss_binomial(6, 3).coeffs == (1, 1, 2, 3, 3, 3, 3, 2, 1, 1)
    with pytest.raises(ValueError):
        gauss_binomial(2, 3)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(9) for k in range(n + 1)])
def test_gauss_binomial_matches_box_partitions(n, k):
    assert gauss_binomial(n, k) == size_polynomial(box_partitions(k, n - k))


def test_gauss_binomial_big_coefficients():
    # exceeds 64-bit range in the middle coefficients' sum
    assert gauss_binomial(64, 32).at_one() == comb(64, 32)


@pytest.mark.parametrize("n", range(31))
def test_gauss_binomial_symmetry_and_q1(n):
    for k in range(n + 1):
        g = gauss_binomial(n, k)
        assert g == gauss_binomial(n, n - k)
        assert g.at_one() == comb(n, k)
        assert g.degree == k * (n - k)
        assert all(c > 0 for c in g.coeffs)


def test_neg_q_pochhammer():
    assert neg_q_pochhammer(0, 1) == Poly((1,))
    assert neg_q_pochhammer(2, 1).coeffs == (1, 1, 1, 1)
    assert neg_q_pochhammer(2, 2).coeffs == (1, 0, 1, 0, 1, 0, 1)
    for n in range(8):
        assert neg_q_pochhammer(n, 2).at_one() == 2 ** n
    assert neg_q_pochhammer(5, 2) == neg_q_pochhammer(5, 1).substitute_power(2)


def test_expand_examples():
    assert expand(QuasiRational.single(Poly((1,)), 1), 3) == [1, 1, 1, 1]
    c = expand(QuasiRational.single(gauss_binomial(6, 3) - 2, 3), 40)
    assert c[20:] == [6] * 21
    c = expand(QuasiRational.single(gauss_binomial(8, 4) - 2, 4), 60)
    assert [c[l] for l in range(40, 44)] == [18, 16, 18, 16]


def _brute_series(f, order):
    # multiply numerators by truncated geometric series term by term
    out = [0] * (order + 1)
    for P, N in f.terms:
        geo = Poly(tuple(1 if i % N == 0 else 0 for i in range(order + 1)))
        prod = P * geo
        for i in range(order + 1):
            out[i] += prod[i]
    return out


@given(st.lists(st.tuples(polys, st.integers(1, 6)), max_size=3), st.integers(0, 30))
def test_expand_against_series_product(terms, order):
    f = QuasiRational(tuple(terms))
    assert expand(f, order) == _brute_series(f, order)


@given(st.lists(st.tuples(polys, st.integers(1, 6)), min_size=1, max_size=3))
def test_residue_sums_describe_the_tail(terms):
    f = QuasiRational(tuple(terms))
    L = f.lcm
    coeffs = expand(f, f.degree + 3 * L)
    pat = f.residue_sums()
    assert all(coeffs[l] == pat[l % L] for l in range(max(f.degree, 0), len(coeffs)))


@given(st.lists(st.tuples(polys, st.integers(1, 6)), min_size=1, max_size=3))
def test_residue_sums_match_partial_fractions(terms):
    # tail value at l is sum_j alpha_j xi^(l j) per term
    f = QuasiRational(tuple(terms))
    pat = f.residue_sums()
    for l in range(f.lcm):
        total = 0
        for P, N in f.terms:
            alphas = partial_fraction_coeffs(P, N, rational=False)
            total += sum(a * cmath.exp(2j * cmath.pi * l * j / N) for j, a in enumerate(alphas))
        assert abs(total - pat[l]) < 1e-6


def test_tail_min_period_examples():
    c = expand(QuasiRational.single(gauss_binomial(6, 3) - 2, 3), 40)
    rep = tail_min_period(c, 3)
    assert (rep.period, rep.pattern) == (1, (6,))
    c = expand(QuasiRational.single(gauss_binomial(8, 4) - 2, 4), 60)
    rep = tail_min_period(c, 4)
    assert (rep.period, rep.pattern) == (2, (18, 16))
    rep = tail_min_period([7] * 10, 2)
    assert (rep.period, rep.start, rep.pattern) == (1, 0, (7,))


def test_tail_min_period_inconclusive():
    with pytest.raises(InconclusiveError):
        tail_min_period([1, 2, 3, 4, 5, 1, 2], 3)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6),
       st.lists(st.integers(-3, 3), max_size=5), st.integers(1, 4))
def test_tail_min_period_properties(block, prefix, reps):
    L = len(block) * reps
    seq = prefix + block * (3 * L // len(block) + 4)
    rep = tail_min_period(seq, L)
    assert L % rep.period == 0
    assert all(seq[i] == seq[i + rep.period] for i in range(rep.start, rep.window_end - rep.period + 1))
    for d in range(1, rep.period):
        if rep.period % d == 0:
            assert not all(seq[i] == seq[i + d] for i in range(rep.start, rep.window_end - d + 1))


def test_eval_at_root():
    g = gauss_binomial(4, 2)
    assert abs(eval_at_root(g, 4, 1)) < 1e-12
    assert abs(eval_at_root(g, 4, 2) - 2) < 1e-12
    assert abs(eval_at_root(g, 7, 0) - 6) < 1e-12


def test_partial_fraction_coeffs():
    assert partial_fraction_coeffs(Poly((1,)), 1) == [1]
    alphas = partial_fraction_coeffs(gauss_binomial(8, 4) - 2, 4)
    assert [4 * a for a in alphas] == [68, 0, 4, 0]


def test_partial_fraction_cnj_example():
    # residue sums of (-q;q)_2^2 are [6, 5, 5]; alpha_0 = 16/3, total tail = 16/3
    P = neg_q_pochhammer(2) ** 2
    assert residue_sums(P, 3) == [6, 5, 5]
    alphas = partial_fraction_coeffs(P, 3)
    assert [3 * a for a in alphas] == [16, 1, 1]


def test_round_exact_rejects_non_integers():
    assert round_exact(3.0000000001 + 1e-9j) == 3
    with pytest.raises(PrecisionError):
        round_exact(2.5)


@pytest.mark.parametrize("n,ys", [(1, [3]), (2, [2]), (5, [-2, 0, 1, 2, 7]), (7, [-1, 3])])
def test_qbinom_formula(n, ys):
    assert qbinom_formula_check(n, ys).ok


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_products(n):
    from fcaffine.numtheory import divisors, euler_phi
    from fcaffine.qseries import cyclotomic
    prod = Poly((1,))
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == Poly((-1,) + (0,) * (n - 1) + (1,))
    assert cyclotomic(n).degree == euler_phi(n)


def test_eval_at_root_vanishing_values_are_exact():
    # [40, 20] vanishes at primitive 40th roots; the coefficients are ~1e10
    P = gauss_binomial(40, 20)
    assert eval_at_root(P, 40, 1) == 0
    assert abs(eval_at_root(P, 40, 20) - comb(20, 10)) < 1e-9
