"""Elementary arithmetic functions, Ramanujan sums, and q-binomials at roots of unity."""

from __future__ import annotations

__all__ = [
    "RootOfUnity", "factorize", "divisors", "euler_phi", "mobius",
    "is_prime_power", "odd_part", "ramanujan_sum", "ramanujan_sum_direct",
    "qbi_at_root",
]

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd, lcm  # noqa: F401  re-exported for callers


@dataclass(frozen=True)
class RootOfUnity:
    """``exp(2*pi*i*exponent/modulus)``."""
    modulus: int
    exponent: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @property
    def order(self) -> int:
        return self.modulus // gcd(self.modulus, self.exponent)

    def __complex__(self):
        return cmath.exp(2j * cmath.pi * self.exponent / self.modulus)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization ``((p, e), ...)`` by trial division."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out -= out // p
    return out


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_prime_power(n: int) -> tuple[int, int] | None:
    """``(p, alpha)`` with ``n == p**alpha`` and ``alpha >= 1``, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    return fac[0] if len(fac) == 1 else None


def odd_part(n: int) -> tuple[int, int]:
    """Write ``n = 2**alpha * u`` with ``u`` odd; return ``(alpha, u)``."""
    alpha = 0
    while n % 2 == 0:
        n //= 2
        alpha += 1
    return alpha, n


def ramanujan_sum(r: int, l: int) -> int:
    """Sum of the ``l``-th powers of the primitive ``r``-th roots of unity (von Sterneck form)."""
    if r < 1:
        raise ValueError("r must be positive")
    g = gcd(r, l)
    q = r // g
    return mobius(q) * euler_phi(r) // euler_phi(q)


def ramanujan_sum_direct(r: int, l: int) -> complex:
    # test oracle only
    return sum(cmath.exp(2j * cmath.pi * l * j / r) for j in range(1, r + 1) if gcd(j, r) == 1)


def qbi_at_root(n: int, k: int, j: int) -> int:
    """
    Value of the Gaussian binomial ``[n, k]`` at ``exp(2*pi*i*j/n)``.

    >>> qbi_at_root(4, 2, 1), qbi_at_root(4, 2, 2), qbi_at_root(6, 3, 0)
    (0, 2, 20)
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    d = gcd(n, j)
    if (k * d) % n:
        return 0
    return comb(d, k * d // n)
