"""
Closed forms for the eventually periodic growth functions of fully
commutative elements (FC) and FC involutions (FCI) in the classical affine
types, with their minimal periods, partial-fraction coefficients, and
Ramanujan-sum expressions.

Every closed form is a ``QuasiRational``: only its tail is meaningful.

>>> tail_pattern(AffineType("C", 2), "FC")
[10, 9, 9]
>>> minimal_period(AffineType("A", 8), "FC")
4
"""

from __future__ import annotations

__all__ = [
    "ClosedForm", "METHODS", "FINITE_SUPPORT", "UnsupportedError",
    "closed_form", "closed_tail", "tail_pattern", "tail_value", "minimal_period",
    "coefficient_anj", "coefficient_cnj", "coefficient_cbar",
    "ramanujan_growth_A", "ramanujan_growth_C", "mean_and_deviation_A",
    "involution_relation_A", "c_fci_numerator",
]

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .coxeter import AffineType
from .numtheory import divisors, is_prime_power, odd_part, ramanujan_sum
from .paths import G_poly, O_poly
from .qseries import Poly, QuasiRational, gauss_binomial, neg_q_pochhammer

METHODS = ("qbinomial", "paths", "hanusa_jones")

# returned by minimal_period when the growth function is eventually zero
FINITE_SUPPORT = "finite"


class UnsupportedError(ValueError):
    pass


@dataclass(frozen=True)
class ClosedForm:
    type: AffineType
    variant: str
    method: str
    value: QuasiRational


def _G(n: int, method: str) -> Poly:
    # (-q;q)_n^2 and G_n(q) agree modulo 1 - q^(n+1)
    return G_poly(n) if method == "paths" else neg_q_pochhammer(n) ** 2


def c_fci_numerator(n: int) -> Poly:
    """Numerator over ``1 - q^(n+1)`` of the alternating FC involutions of type C."""
    return neg_q_pochhammer(n, 2).shift((n + 1) * (n + 2) // 2)


def closed_tail(t: AffineType, variant: str = "FC", method: str = "qbinomial") -> QuasiRational:
    n, fam = t.n, t.family
    if method not in METHODS:
        raise UnsupportedError(f"unknown method {method!r}")
    if variant == "FC":
        if fam == "A":
            if method == "qbinomial":
                return QuasiRational.single(gauss_binomial(2 * n, n) - 2, n)
            if method == "paths":
                return QuasiRational.single(O_poly(n) - 2, n)
            num = Poly()
            for k in range(1, n):
                num = num + gauss_binomial(n, k) ** 2
            return QuasiRational.single(num, n)
        if method == "hanusa_jones":
            raise UnsupportedError("hanusa_jones applies to type A only")
        G = _G(n, method)
        if fam == "C":
            return QuasiRational(((G, n + 1), (Poly.const(2 * n), 1)))
        if fam == "B":
            return QuasiRational((
                (G.shift(n + 1) * 2, n + 1),
                (Poly.monomial(2 * n + 4, 2 * n + 3), 1),
                (Poly.monomial(2 * (2 * n + 1)), 2 * n + 1),
            ))
        return QuasiRational((
            (G.shift(n + 1) * 4, n + 1),
            (Poly.monomial(2 * n + 5, 2 * n + 6), 1),
            (Poly.monomial(3 * (n + 1), 2), n + 1),
        ))
    if variant == "FCI":
        if method != "qbinomial":
            raise UnsupportedError("involution tails exist for the qbinomial method only")
        if fam == "A":
            if n % 2:
                return QuasiRational(())
            num = gauss_binomial(n, n // 2).substitute_power(2).shift(n * n // 4)
            return QuasiRational.single(num, n)
        if fam == "C":
            return QuasiRational(((c_fci_numerator(n), n + 1), (Poly.monomial(2 * n + 3, 2), 2)))
        raise UnsupportedError("involution tails of types B and D are not covered")
    raise UnsupportedError(f"unknown variant {variant!r}")


def closed_form(t: AffineType, variant: str = "FC", method: str = "qbinomial") -> ClosedForm:
    return ClosedForm(t, variant, method, closed_tail(t, variant, method))


def tail_pattern(t: AffineType, variant: str = "FC", method: str = "qbinomial") -> list[int]:
    """Eventual values indexed by residue modulo the lcm of the moduli."""
    return closed_tail(t, variant, method).residue_sums()


def tail_value(t: AffineType, variant: str, l: int, method: str = "qbinomial") -> int:
    pat = tail_pattern(t, variant, method)
    return pat[l % len(pat)]


def minimal_period(t: AffineType, variant: str = "FC"):
    n, fam = t.n, t.family
    _, odd = odd_part(n + 1)
    if variant == "FC":
        if fam == "A":
            pp = is_prime_power(n)
            return pp[0] ** (pp[1] - 1) if pp else n
        if fam == "C":
            return odd
        if fam == "B":
            return (2 * n + 1) * odd
        return n + 1
    if variant == "FCI":
        if fam == "A":
            return n if n % 2 == 0 else FINITE_SUPPORT
        if fam == "C":
            return 2 * odd
        raise UnsupportedError("involution periods of types B and D are not covered")
    raise UnsupportedError(f"unknown variant {variant!r}")


def coefficient_anj(n: int, j: int) -> int:
    """``P(xi_n^-j)`` for ``P = [2n, n] - 2``."""
    d = gcd(n, j)
    return comb(2 * d, d) - 2


def coefficient_cnj(n: int, j: int) -> Fraction:
    """``P(xi_{n+1}^-j)`` for ``P = (-q;q)_n^2``."""
    d = gcd(n + 1, j)
    return Fraction((1 - (-1) ** ((n + 1) // d)) ** (2 * d), 4)


def coefficient_cbar(n: int, j: int) -> complex:
    """``P(xi_{n+1}^-j)`` for the numerator ``c_fci_numerator(n)``."""
    d = gcd(n + 1, j)
    f = (n + 1) // d
    return (-1) ** (n * j) / 2 * ((1 - 1j ** f) * (1 - (-1j) ** f)) ** d


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def ramanujan_growth_A(n: int, l: int) -> int:
    return _exact_div(sum((comb(2 * d, d) - 2) * ramanujan_sum(n // d, l)
                          for d in divisors(n) if d > 1), n)


def ramanujan_growth_C(n: int, l: int) -> int:
    alpha, odd = odd_part(n + 1)
    total = sum(2 ** (u * 2 ** (alpha + 1)) * ramanujan_sum(odd // u, l) for u in divisors(odd))
    return 2 * n + _exact_div(total, 4 * (n + 1))


def mean_and_deviation_A(n: int) -> tuple[Fraction, Fraction]:
    mean = Fraction(comb(2 * n, n) - 2, n)
    pattern = tail_pattern(AffineType("A", n), "FC")
    return mean, max(abs(a - mean) for a in pattern)


def involution_relation_A(m: int, l: int) -> int:
    """Predicted number of FC involutions of length ``l`` in type A with ``2m`` generators."""
    if (l - m) % 2:
        return 0
    x = l // 2 if m % 2 == 0 else (l + m) // 2
    return tail_value(AffineType("A", m), "FC", x) + (2 if x % m == 0 else 0)
