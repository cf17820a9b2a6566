"""
Integer partitions fitting in a box, and the two bijections behind

    sum_k [a,k][b,k] q^(k^2)        = [a+b, a]      (Durfee square)
    sum_k [n,k] q^(k(k+1)/2)        = (-q;q)_n      (staircase removal)

>>> sorted(box_partitions(2, 2))
[(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
"""

from __future__ import annotations

__all__ = [
    "Partition", "box_partitions", "fits_box", "size_polynomial",
    "durfee_decompose", "durfee_recompose",
    "distinct_partitions", "staircase_bijection", "staircase_inverse",
]

from typing import Iterable, Iterator

from .qseries import Poly


class Partition(tuple):
    """A weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        return Partition(sum(1 for p in self if p >= i) for i in range(1, (self[0] if self else 0) + 1))


def fits_box(lam: Partition, rows: int, cols: int) -> bool:
    """At most ``rows`` parts, each at most ``cols``."""
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def box_partitions(k: int, w: int) -> list[Partition]:
    """All partitions with at most ``k`` parts, each part at most ``w``."""
    return [Partition(p) for p in _box(k, w)]


def _box(k: int, w: int) -> Iterator[tuple[int, ...]]:
    yield ()
    if k == 0:
        return
    for first in range(1, w + 1):
        for rest in _box(k - 1, first):
            yield (first,) + rest


def size_polynomial(parts: Iterable[Partition]) -> Poly:
    counts: dict[int, int] = {}
    for lam in parts:
        counts[lam.size] = counts.get(lam.size, 0) + 1
    top = max(counts, default=-1)
    return Poly(tuple(counts.get(i, 0) for i in range(top + 1)))


def durfee_decompose(lam: Partition, a: int, b: int) -> tuple[int, Partition, Partition]:
    """
    Split ``lam`` (in an ``a x b`` box) into its Durfee square side ``k``,
    the part below the square (``(a-k) x k`` box) and the part to its right
    (``k x (b-k)`` box).

    >>> durfee_decompose(Partition((3, 1)), 2, 3)
    (1, (1,), (2,))
    """
    if not fits_box(lam, a, b):
        raise ValueError(f"{tuple(lam)} does not fit in a {a}x{b} box")
    k = 0
    while k < len(lam) and lam[k] >= k + 1:
        k += 1
    left = Partition(lam[k:])
    right = Partition(p - k for p in lam[:k] if p > k)
    return k, left, right


def durfee_recompose(k: int, left: Partition, right: Partition) -> Partition:
    padded = tuple(right) + (0,) * (k - len(right))
    return Partition(tuple(p + k for p in padded) + tuple(left))


def distinct_partitions(n: int) -> Iterator[Partition]:
    """Partitions into distinct parts, all at most ``n``."""
    def rec(top: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for first in range(1, top + 1):
            for rest in rec(first - 1):
                yield (first,) + rest
    return (Partition(p) for p in rec(n))


def staircase_bijection(lam: Partition, n: int) -> tuple[int, Partition]:
    """
    Remove the staircase ``k, k-1, ..., 1`` from a partition with ``k``
    distinct parts bounded by ``n``; the rest fits in a ``k x (n-k)`` box.

    >>> staircase_bijection(Partition((3, 1)), 3)
    (2, (1,))
    """
    if any(a == b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"parts of {tuple(lam)} are not distinct")
    if lam and lam[0] > n:
        raise ValueError(f"largest part of {tuple(lam)} exceeds {n}")
    k = len(lam)
    return k, Partition(p - (k - i) for i, p in enumerate(lam) if p - (k - i) > 0)


def staircase_inverse(k: int, mu: Partition) -> Partition:
    padded = tuple(mu) + (0,) * (k - len(mu))
    return Partition(p + (k - i) for i, p in enumerate(padded))
