"""
Lattice paths with steps D = (1,-1), H1 = H2 = (1,0), U = (1,1) that stay
weakly above the x-axis and touch it.

``O_n`` holds the closed paths (same start and end height) with ``n`` steps,
weighted by area ``sum_{x<n} h_x``; ``G_n`` holds all such paths, weighted by
``sum_{x<=n} h_x``. Rotating a closed path one step to the right generates a
cyclic action of order ``n`` on ``O_n``, and the area polynomial evaluated at
``n``-th roots of unity counts its fixed points.

>>> O_poly(2)
Poly((4, 2))
>>> G_poly(1)
Poly((2, 2))
"""

from __future__ import annotations

__all__ = [
    "Step", "LatticePath", "enumerate_O", "enumerate_G", "O_poly", "G_poly",
    "O_poly_enumerated", "G_poly_enumerated", "rotate", "CSPRow", "csp_verify",
]

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import product
from math import comb, gcd
from typing import Iterator

from .qseries import Poly, eval_at_root, round_exact


class Step(IntEnum):
    D = 0
    H1 = 1
    H2 = 2
    U = 3

    @property
    def delta(self) -> int:
        return _DELTA[self]


_DELTA = (-1, 0, 0, 1)


@dataclass(frozen=True)
class LatticePath:
    steps: tuple[Step, ...]

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def heights(self) -> tuple[int, ...]:
        """``h_0 .. h_n`` shifted so that the minimum is 0."""
        return _heights(self.steps)

    @property
    def closed(self) -> bool:
        return sum(_DELTA[s] for s in self.steps) == 0

    @property
    def area(self) -> int:
        return sum(self.heights[:-1])

    @property
    def height_sum(self) -> int:
        return sum(self.heights)

    def __str__(self):
        return "".join(s.name for s in self.steps)


def _heights(steps) -> tuple[int, ...]:
    hs = [0]
    for s in steps:
        hs.append(hs[-1] + _DELTA[s])
    low = min(hs)
    return tuple(h - low for h in hs)


def _closed_words(n: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int], bal: int):
        left = n - len(prefix)
        if left == 0:
            yield tuple(prefix)
            return
        for s in (0, 1, 2, 3):
            b = bal + _DELTA[s]
            if abs(b) <= left - 1:
                prefix.append(s)
                yield from rec(prefix, b)
                prefix.pop()
    return rec([], 0)


def enumerate_O(n: int) -> list[LatticePath]:
    if n < 1:
        raise ValueError("n must be positive")
    return [LatticePath(tuple(Step(s) for s in w)) for w in _closed_words(n)]


def enumerate_G(n: int) -> list[LatticePath]:
    if n < 1:
        raise ValueError("n must be positive")
    return [LatticePath(w) for w in product(Step, repeat=n)]


def O_poly_enumerated(n: int) -> Poly:
    return _stat_poly(sum(_heights(w)[:-1]) for w in _closed_words(n))


def G_poly_enumerated(n: int) -> Poly:
    return _stat_poly(sum(_heights(w)) for w in product(range(4), repeat=n))


def _stat_poly(values) -> Poly:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return Poly(tuple(counts.get(i, 0) for i in range(max(counts) + 1)))


def _transfer(n: int, closed: bool) -> Poly:
    # state: (raw height, running minimum) -> {raw height sum: count}; the
    # normalised statistic is raw sum minus (number of summed points) * min
    states: dict[tuple[int, int], dict[int, int]] = {(0, 0): {0: 1}}
    for _ in range(n):
        nxt: dict[tuple[int, int], dict[int, int]] = {}
        for (h, mn), sums in states.items():
            for d, mult in ((-1, 1), (0, 2), (1, 1)):
                h2 = h + d
                key = (h2, min(mn, h2))
                bucket = nxt.setdefault(key, {})
                for S, c in sums.items():
                    # the sum covers h_0 .. h_{x}; add the point being left
                    bucket[S + h] = bucket.get(S + h, 0) + c * mult
        states = nxt
    counts: dict[int, int] = {}
    for (h, mn), sums in states.items():
        if closed and h != 0:
            continue
        for S, c in sums.items():
            stat = S - n * mn if closed else S + h - (n + 1) * mn
            counts[stat] = counts.get(stat, 0) + c
    return Poly(tuple(counts.get(i, 0) for i in range(max(counts) + 1)))


@lru_cache(maxsize=None)
def O_poly(n: int) -> Poly:
    """Closed paths of length ``n`` counted by area."""
    if n < 1:
        raise ValueError("n must be positive")
    return _transfer(n, closed=True)


@lru_cache(maxsize=None)
def G_poly(n: int) -> Poly:
    """All paths of length ``n`` counted by the sum of heights of their points."""
    if n < 1:
        raise ValueError("n must be positive")
    return _transfer(n, closed=False)


def rotate(p: LatticePath) -> LatticePath:
    """Move the first step to the end; defined on closed paths only."""
    if not p.closed:
        raise ValueError(f"{p} is not a closed path")
    return LatticePath(p.steps[1:] + p.steps[:1])


@dataclass(frozen=True)
class CSPRow:
    j: int
    fixed_points: int
    evaluation: int
    binomial: int

    @property
    def ok(self) -> bool:
        return self.fixed_points == self.evaluation == self.binomial


def csp_verify(n: int) -> list[CSPRow]:
    """
    For each ``j < n`` compare the number of closed paths fixed by ``j``
    rotations, the area polynomial at ``exp(2*pi*i*j/n)``, and
    ``binomial(2d, d)`` with ``d = gcd(n, j)``.
    """
    words = list(_closed_words(n))
    P = O_poly(n)
    rows = []
    for j in range(n):
        fixed = sum(1 for w in words if w[j:] + w[:j] == w)
        d = gcd(n, j)
        rows.append(CSPRow(j, fixed, round_exact(eval_at_root(P, n, j)), comb(2 * d, d)))
    return rows
