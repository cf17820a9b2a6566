"""
Affine Coxeter graphs of types A, B, C, D, a breadth-first census of fully
commutative elements by length, and the decomposition of long alternating
heaps into a pair of box partitions.

Parameters follow one convention throughout: ``AffineType("A", n)`` is the
group with ``n`` generators on a cycle, ``AffineType("C", n)`` has ``n + 1``
generators on a path, and the B and D types are built from the C path by
replacing one or both bond-4 ends with a fork.

>>> fc_census(AffineType("A", 3), 5).counts
(1, 3, 6, 6, 6, 6)
"""

from __future__ import annotations

__all__ = [
    "AffineType", "CensusResult", "ResourceError", "DomainError", "graph",
    "iter_fc_layers", "fc_census", "is_involution",
    "TypeADecomposition", "TypeCDecomposition",
    "decompose_A", "recompose_A", "decompose_C", "recompose_C",
    "lower_profile", "upper_profile", "partition_from_profile",
    "profile_from_partition", "heap_from_chains", "is_zigzag",
]

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .heaps import CoxeterGraph, Heap, append_max, canonical_word, dual, heap_from_word, is_alternating
from .partitions import Partition, fits_box

DEFAULT_MAX_LAYER = 2_000_000


class ResourceError(RuntimeError):
    """A census layer outgrew the configured guard."""


class DomainError(ValueError):
    """Input outside the domain of a decomposition."""


@dataclass(frozen=True)
class AffineType:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in "ABCD" or len(self.family) != 1:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("n must be at least 2")

    @property
    def rank(self) -> int:
        """Number of generators."""
        return self.n + {"A": 0, "C": 1, "B": 2, "D": 3}[self.family]

    def __str__(self):
        return f"{self.family}~(n={self.n})"


@lru_cache(maxsize=None)
def graph(t: AffineType) -> CoxeterGraph:
    """
    The Coxeter graph of ``t``.

    Generator indices: type A uses ``s_0 .. s_{n-1}`` around the cycle. Types
    B, C, D index the path ``t = 0, s_1 .. s_{n-1}, u = n``; B adds a second
    fork leaf ``n + 1`` at ``s_1``, and D adds leaves ``n + 1`` at ``s_1`` and
    ``n + 2`` at ``s_{n-1}``.
    """
    n = t.n
    edges: dict[tuple[int, int], int] = {}
    if t.family == "A":
        if n < 3:
            raise ValueError("type A census needs n >= 3 (n = 2 has an infinite bond)")
        for i in range(n):
            edges[i, (i + 1) % n] = 3
        names = [f"s{i}" for i in range(n)]
        return CoxeterGraph.from_edges(n, edges, names)
    for i in range(n):
        edges[i, i + 1] = 3
    names = ["t"] + [f"s{i}" for i in range(1, n)] + ["u"]
    if t.family == "C":
        edges[0, 1] = 4
        edges[n - 1, n] = 4
    elif t.family == "B":
        edges[n - 1, n] = 4
        edges[1, n + 1] = 3
        names.append("t'")
    else:
        edges[1, n + 1] = 3
        edges[n - 1, n + 2] = 3
        names += ["t'", "u'"]
    return CoxeterGraph.from_edges(t.rank, edges, names)


@dataclass(frozen=True)
class CensusResult:
    type: AffineType
    counts: tuple[int, ...]
    max_len: int
    involutions_only: bool = False


def is_involution(h: Heap) -> bool:
    """FC involutions are exactly the self-dual FC heaps."""
    return canonical_word(dual(h)) == canonical_word(h)


def _extend(heaps: Sequence[Heap]) -> list[tuple[tuple, Heap]]:
    out = []
    for h in heaps:
        for s in range(h.graph.size):
            h2 = append_max(h, s)
            if h2 is not None:
                out.append((h2.cf, h2))
    return out


def iter_fc_layers(g: CoxeterGraph, max_len: int, workers: int = 1,
                   max_layer: int = DEFAULT_MAX_LAYER) -> Iterator[list[Heap]]:
    """
    Yield the FC heaps of each length ``0 .. max_len``, sorted by canonical form.

    Every prefix of a reduced word of an FC element is again one, so layer
    ``l + 1`` is obtained by appending one maximal element to layer ``l``.
    """
    layer = [Heap.empty(g)]
    yield layer
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for _ in range(max_len):
            if pool is None:
                found = _extend(layer)
            else:
                size = max(1, -(-len(layer) // (4 * workers)))
                chunks = [layer[i:i + size] for i in range(0, len(layer), size)]
                found = [x for part in pool.map(_extend, chunks) for x in part]
            merged = dict(found)
            if len(merged) > max_layer:
                raise ResourceError(f"census layer of size {len(merged)} exceeds guard {max_layer}")
            layer = [merged[k] for k in sorted(merged)]
            yield layer
    finally:
        if pool is not None:
            pool.shutdown()


def fc_census(t: AffineType, max_len: int, involutions_only: bool = False,
              workers: int = 1, max_layer: int = DEFAULT_MAX_LAYER) -> CensusResult:
    """Number of FC elements (or FC involutions) of each length up to ``max_len``."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    counts = []
    for layer in iter_fc_layers(graph(t), max_len, workers, max_layer):
        counts.append(sum(map(is_involution, layer)) if involutions_only else len(layer))
    return CensusResult(t, tuple(counts), max_len, involutions_only)


# ---------------------------------------------------------------------------
# decompositions of long alternating heaps
#
# Along the path (or cycle) s_0, s_1, ..., compare the first elements of
# consecutive chains: "A" when s_i^(1) < s_{i+1}^(1), "D" otherwise. This lower
# profile, a word with some number k of D's, is read as a partition in a box
# with k rows (for each D, the number of A's after it). The upper part is the
# lower profile of the dual heap. Given both profiles and m = |H_{s_0}|, the
# chain sizes follow from the height functions of the two profiles.

def _first_last(h: Heap, s: int) -> tuple[int, int]:
    ch = h.chain(s)
    if not ch:
        raise DomainError(f"generator {s} does not occur")
    return ch[0], ch[-1]


def lower_profile(h: Heap, order: Sequence[int]) -> str:
    firsts = [_first_last(h, s)[0] for s in order]
    return "".join("D" if h.less(y, x) else "A" for x, y in zip(firsts, firsts[1:]))


def upper_profile(h: Heap, order: Sequence[int]) -> str:
    """Lower profile of the dual heap."""
    lasts = [_first_last(h, s)[1] for s in order]
    return "".join("D" if h.less(x, y) else "A" for x, y in zip(lasts, lasts[1:]))


def partition_from_profile(word: str) -> Partition:
    parts = []
    ups = word.count("A")
    for c in word:
        if c == "A":
            ups -= 1
        elif ups:
            parts.append(ups)
    return Partition(parts)


def profile_from_partition(lam: Partition, downs: int, ups: int) -> str:
    if not fits_box(lam, downs, ups):
        raise DomainError(f"{tuple(lam)} does not fit in a {downs}x{ups} box")
    parts = tuple(lam) + (0,) * (downs - len(lam))
    out = []
    placed = 0
    for p in parts:
        before = ups - p
        out.append("A" * (before - placed) + "D")
        placed = before
    out.append("A" * (ups - placed))
    return "".join(out)


def _heights(word: str, start: int) -> list[int]:
    hs = [start]
    for c in word:
        hs.append(hs[-1] + (1 if c == "A" else -1))
    return hs


def heap_from_chains(g: CoxeterGraph, counts: Sequence[int], first: dict[tuple[int, int], int]) -> Heap:
    """
    Build the alternating heap with ``counts[s]`` elements labelled ``s`` in
    which the chain ``H_{s,t}`` of each edge starts with label ``first[s, t]``.
    """
    succ: dict[tuple[int, int], list[tuple[int, int]]] = {}
    indeg: dict[tuple[int, int], int] = {(s, c): 0 for s in range(g.size) for c in range(counts[s])}

    def rel(a, b):
        succ.setdefault(a, []).append(b)
        indeg[b] += 1

    for s in range(g.size):
        for c in range(counts[s] - 1):
            rel((s, c), (s, c + 1))
    for s, t in g.edges:
        a = first[s, t]
        b = t if a == s else s
        if counts[a] - counts[b] not in (0, 1):
            raise DomainError(f"chain sizes {counts[a]}, {counts[b]} cannot alternate from {a}")
        seq = [(a if r % 2 == 0 else b, r // 2) for r in range(counts[a] + counts[b])]
        for x, y in zip(seq, seq[1:]):
            rel(x, y)
    ready = [(c, s) for (s, c), d in indeg.items() if d == 0]
    heapq.heapify(ready)
    word = []
    while ready:
        c, s = heapq.heappop(ready)
        word.append(s)
        for y in succ.get((s, c), ()):
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(ready, (y[1], y[0]))
    if len(word) != len(indeg):
        raise DomainError("chain data is cyclic")
    return heap_from_word(g, word)


@dataclass(frozen=True)
class TypeADecomposition:
    """
    ``low`` lies in a ``k x (n-k)`` box and ``high`` (the same construction on
    the dual heap) in an ``(n-k) x k`` box; ``|H| = |low| + |high| + (m-k)n + k^2``.
    """
    k: int
    m: int
    low: Partition
    high: Partition

    def size(self, n: int) -> int:
        return self.low.size + self.high.size + (self.m - self.k) * n + self.k ** 2


def decompose_A(h: Heap, t: AffineType) -> TypeADecomposition:
    n = t.n
    if t.family != "A":
        raise DomainError("decompose_A needs type A")
    if not is_alternating(h):
        raise DomainError("heap is not alternating")
    m = len(h.chain(0))
    if 2 * m <= n:
        raise DomainError(f"|H_s0| = {m} is not above n/2")
    order = list(range(n)) + [0]
    e = lower_profile(h, order)
    f = upper_profile(h, order)
    k = e.count("D")
    if f.count("A") != k:
        raise DomainError("lower and upper profiles disagree on k")
    return TypeADecomposition(k, m, partition_from_profile(e), partition_from_profile(f))


def recompose_A(d: TypeADecomposition, t: AffineType) -> Heap:
    n, k, m = t.n, d.k, d.m
    if not 1 <= k <= n - 1 or 2 * m <= n:
        raise DomainError(f"parameters k={k}, m={m} out of range for n={n}")
    e = profile_from_partition(d.low, k, n - k)
    f = profile_from_partition(d.high, n - k, k)
    low = _heights(e, 0)
    # upper profile descends where the dual ascends
    high = _heights(f.translate(str.maketrans("AD", "DA")), 2 * (m - 1))
    counts = [(high[i] - low[i]) // 2 + 1 for i in range(n)]
    if min(counts) < 1:
        raise DomainError("profiles cross")
    first = {}
    for i in range(n):
        s, s1 = i, (i + 1) % n
        first[min(s, s1), max(s, s1)] = s if e[i] == "A" else s1
    return heap_from_chains(graph(t), counts, first)


@dataclass(frozen=True)
class TypeCDecomposition:
    """
    ``j`` counts descents of the lower profile and ``low`` lies in a
    ``j x (n-j)`` box; ``high`` is the lower partition of the dual heap, whose
    descent count is ``n - k``. Size identity:
    ``|H| = |low| + |high| + (n+1)(m - n/2) + C(j+1, 2) + C(n-k+1, 2)``.
    """
    j: int
    k: int
    m: int
    low: Partition
    high: Partition

    def size(self, n: int) -> int:
        jd = n - self.k
        return (self.low.size + self.high.size + (n + 1) * self.m - n * (n + 1) // 2
                + self.j * (self.j + 1) // 2 + jd * (jd + 1) // 2)


def decompose_C(h: Heap, t: AffineType) -> TypeCDecomposition:
    n = t.n
    if t.family != "C":
        raise DomainError("decompose_C needs type C")
    if not is_alternating(h):
        raise DomainError("zigzag (non-alternating) heap")
    m = len(h.chain(0))
    if m <= n:
        raise DomainError(f"|H_t| = {m} is not above n")
    order = list(range(n + 1))
    e = lower_profile(h, order)
    f = upper_profile(h, order)
    j = e.count("D")
    jd = f.count("D")
    return TypeCDecomposition(j, n - jd, m, partition_from_profile(e), partition_from_profile(f))


def recompose_C(d: TypeCDecomposition, t: AffineType) -> Heap:
    n, j, m = t.n, d.j, d.m
    jd = n - d.k
    if not (0 <= j <= n and 0 <= jd <= n) or m <= n:
        raise DomainError(f"parameters j={j}, k={d.k}, m={m} out of range for n={n}")
    e = profile_from_partition(d.low, j, n - j)
    f = profile_from_partition(d.high, jd, n - jd)
    low = _heights(e, 0)
    high = _heights(f.translate(str.maketrans("AD", "DA")), 2 * (m - 1))
    counts = [(high[i] - low[i]) // 2 + 1 for i in range(n + 1)]
    if min(counts) < 1:
        raise DomainError("profiles cross")
    first = {(i, i + 1): i if e[i] == "A" else i + 1 for i in range(n)}
    return heap_from_chains(graph(t), counts, first)


def is_zigzag(h: Heap, t: AffineType) -> bool:
    """
    True when ``h`` is a chain whose word is a factor of the infinite word
    ``(t s_1 ... s_{n-1} u s_{n-1} ... s_1)^inf`` (type C only).
    """
    if t.family != "C":
        raise DomainError("zigzag heaps are defined in type C")
    word = canonical_word(h)
    if any(layer != i for i, (layer, _) in enumerate(h.cf)):
        return False
    n = t.n
    period = list(range(n + 1)) + list(range(n - 1, 0, -1))
    if not word:
        return True
    reps = len(word) // len(period) + 2
    text = period * reps
    return any(text[i:i + len(word)] == list(word) for i in range(len(period)))
