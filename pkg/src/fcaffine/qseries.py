"""
Exact univariate polynomials over the integers, Gaussian binomials, and
sums of terms ``P(q) / (1 - q^N)`` studied through their coefficient tails.

>>> gauss_binomial(4, 2)
Poly((1, 1, 2, 1, 1))
>>> expand(QuasiRational.single(gauss_binomial(6, 3) - 2, 3), 12)[-3:]
[6, 6, 6]
"""

from __future__ import annotations

__all__ = [
    "Poly", "QuasiRational", "TailReport", "InconclusiveError", "PrecisionError",
    "poly_add", "poly_mul", "gauss_binomial", "neg_q_pochhammer", "expand",
    "residue_sums", "tail_min_period", "partial_fraction_coeffs",
    "eval_at_root", "cyclotomic", "qbinom_formula_check",
]

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .numtheory import divisors

# absolute tolerance on complex evaluations whose exact value is an integer
ROUNDING_TOL = 1e-6


class InconclusiveError(ValueError):
    """The coefficient window is too short to certify a period."""


class PrecisionError(ArithmeticError):
    """A floating evaluation did not land within tolerance of an integer."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial in ``q``; ``coeffs[i]`` is the coefficient of ``q**i``."""
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> Poly:
        return cls((0,) * e + (c,))

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, e: int) -> Poly:
        """Multiply by ``q**e``."""
        if not self.coeffs:
            return self
        return Poly((0,) * e + self.coeffs)

    def substitute_power(self, r: int) -> Poly:
        """Return ``P(q**r)``."""
        out = [0] * (r * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[r * i] = c
        return Poly(tuple(out))

    def at_one(self) -> int:
        return sum(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({self.coeffs!r})"


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return Poly(tuple(a[i] + b[i] for i in range(n)))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly()
    out = [0] * (len(a) + len(b) - 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(bc):
                out[i + j] += x * y
    return Poly(tuple(out))


@lru_cache(maxsize=None)
def gauss_binomial(n: int, k: int) -> Poly:
    """
    The q-binomial coefficient ``[n choose k]_q`` via the Pascal-type
    recurrence ``[n,k] = [n-1,k-1] + q^k [n-1,k]``.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"empty range: need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return Poly.const(1)
    return gauss_binomial(n - 1, k - 1) + gauss_binomial(n - 1, k).shift(k)


def neg_q_pochhammer(n: int, step: int = 1) -> Poly:
    """``prod_{i=1..n} (1 + q^(step*i))``; step 1 is ``(-q;q)_n``, step 2 is ``(-q^2;q^2)_n``."""
    if step not in (1, 2):
        raise ValueError("step must be 1 or 2")
    p = Poly.const(1)
    for i in range(1, n + 1):
        p = p * (Poly.monomial(step * i) + 1)
    return p


@dataclass(frozen=True)
class QuasiRational:
    """A sum of terms ``numerator / (1 - q^modulus)``, meaningful up to a polynomial."""
    terms: tuple[tuple[Poly, int], ...]

    def __post_init__(self):
        for _, N in self.terms:
            if N < 1:
                raise ValueError("moduli must be positive")

    @classmethod
    def single(cls, numerator: Poly, modulus: int) -> QuasiRational:
        return cls(((numerator, modulus),))

    def __add__(self, other: QuasiRational) -> QuasiRational:
        return QuasiRational(self.terms + other.terms)

    @property
    def lcm(self) -> int:
        return math.lcm(*(N for _, N in self.terms)) if self.terms else 1

    @property
    def degree(self) -> int:
        """Largest numerator degree; the tail is fully periodic beyond it."""
        return max((P.degree for P, _ in self.terms), default=-1)

    def residue_sums(self) -> list[int]:
        """Eventual coefficient values, indexed by residue mod ``lcm``."""
        L = self.lcm
        out = [0] * L
        for P, N in self.terms:
            sums = residue_sums(P, N)
            for r in range(L):
                out[r] += sums[r % N]
        return out


def expand(f: QuasiRational, order: int) -> list[int]:
    """Coefficients ``c_0 .. c_order`` of the power series of ``f``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [0] * (order + 1)
    for P, N in f.terms:
        for e, c in enumerate(P.coeffs):
            if c:
                for i in range(e, order + 1, N):
                    out[i] += c
    return out


def residue_sums(P: Poly, N: int) -> list[int]:
    """Sum of the coefficients of ``P`` in each residue class mod ``N``."""
    out = [0] * N
    for e, c in enumerate(P.coeffs):
        out[e % N] += c
    return out


@dataclass(frozen=True)
class TailReport:
    start: int
    period: int
    pattern: tuple[int, ...]
    window_end: int


def _periodic_from(coeffs: Sequence[int], p: int) -> int:
    """Smallest s with coeffs[l] == coeffs[l+p] for all s <= l <= len-1-p."""
    s = len(coeffs) - p
    while s > 0 and coeffs[s - 1] == coeffs[s - 1 + p]:
        s -= 1
    return max(s, 0)


def tail_min_period(coeffs: Sequence[int], lcm_hint: int) -> TailReport:
    """
    Minimal eventual period of ``coeffs``, searched among divisors of
    ``lcm_hint`` (a period known in advance).

    >>> tail_min_period([5, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2], 4)
    TailReport(start=1, period=2, pattern=(2, 1), window_end=12)
    """
    if lcm_hint < 1:
        raise ValueError("lcm_hint must be positive")
    end = len(coeffs) - 1
    L = lcm_hint
    start = _periodic_from(coeffs, L)
    if len(coeffs) - start < 3 * L:
        raise InconclusiveError(
            f"certified suffix of length {len(coeffs) - start} is shorter than 3*{L}")
    for p in divisors(L):
        if all(coeffs[i] == coeffs[i + p] for i in range(start, end - p + 1)):
            pattern = [0] * p
            for i in range(start, start + p):
                pattern[i % p] = coeffs[i]
            return TailReport(start, p, tuple(pattern), end)
    raise AssertionError("unreachable: lcm_hint itself is a period")


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The cyclotomic polynomial ``Phi_n``."""
    num = Poly((-1,) + (0,) * (n - 1) + (1,))
    for d in divisors(n):
        if d < n:
            num = _exact_quotient(num, cyclotomic(d))
    return num


def _poly_mod(P: Poly, M: Poly) -> list[int]:
    # M monic; integer long division
    rem = list(P.coeffs)
    dm = M.degree
    for i in range(len(rem) - 1, dm - 1, -1):
        c = rem[i]
        if c:
            for k, m in enumerate(M.coeffs):
                rem[i - dm + k] -= c * m
    return rem[:dm]


def _exact_quotient(P: Poly, M: Poly) -> Poly:
    rem = list(P.coeffs)
    dm = M.degree
    quot = [0] * (len(rem) - dm)
    for i in range(len(rem) - 1, dm - 1, -1):
        c = rem[i]
        quot[i - dm] = c
        if c:
            for k, m in enumerate(M.coeffs):
                rem[i - dm + k] -= c * m
    if any(rem[:dm]):
        raise ArithmeticError("division is not exact")
    return Poly(tuple(quot))


def eval_at_root(P: Poly, N: int, j: int) -> complex:
    """
    Value of ``P`` at ``exp(2*pi*i*j/N)``.

    ``P`` is first reduced exactly modulo the cyclotomic polynomial of the
    root's order, so values that vanish come out as exact zeros and large
    coefficients cancel before any floating point work.
    """
    j %= N
    order = N // math.gcd(N, j)
    folded = Poly(tuple(residue_sums(P, order)))
    rem = _poly_mod(folded, cyclotomic(order))
    x = cmath.exp(2j * cmath.pi * (j * order // N) / order)
    acc = 0j
    for c in reversed(rem):
        acc = acc * x + c
    return acc


def round_exact(z: complex, tol: float = ROUNDING_TOL) -> int:
    """Round a complex number known to be an integer; raise if it is not close."""
    r = round(z.real)
    if abs(z - r) >= tol:
        raise PrecisionError(f"{z} is not within {tol} of an integer")
    return r


def partial_fraction_coeffs(P: Poly, N: int, rational: bool = True) -> list:
    """
    Coefficients ``alpha_j = P(xi_N^-j) / N`` of ``P/(1-q^N)`` against the
    simple fractions ``1/(1 - q xi_N^j)``.

    With ``rational`` the values are known to be rational: each ``N*alpha_j``
    is rounded to an integer and returned as an exact ``Fraction``. Otherwise
    raw complex values are returned.
    """
    if N < 1:
        raise ValueError("N must be positive")
    vals = [eval_at_root(P, N, -j) for j in range(N)]
    if not rational:
        return [v / N for v in vals]
    return [Fraction(round_exact(v), N) for v in vals]


@dataclass(frozen=True)
class QBinomReport:
    ok: bool
    counterexample: tuple | None = None


def qbinom_formula_check(n: int, y_samples: Sequence[int]) -> QBinomReport:
    """
    Check ``prod_{i<n} (y - q^i) == sum_k [n,k] q^C(k,2) (-1)^k y^(n-k)`` as
    polynomials in ``q`` for each integer ``y`` in ``y_samples``.
    """
    for y in y_samples:
        lhs = Poly.const(1)
        for i in range(n):
            lhs = lhs * (Poly.const(y) - Poly.monomial(i))
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + gauss_binomial(n, k).shift(k * (k - 1) // 2) * ((-1) ** k * y ** (n - k))
        if lhs != rhs:
            return QBinomReport(False, (y, lhs, rhs))
    return QBinomReport(True)
