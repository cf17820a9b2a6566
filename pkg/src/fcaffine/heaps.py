"""
Heaps of pieces over a Coxeter graph.

A heap is stored in the order its elements were added, which is always a
linear extension of the heap order. Element ``i`` carries its label, the
bitmask of elements below it (reflexive), and its Cartier-Foata layer (the
length of the longest chain ending at ``i``). The canonical word lists the
labels layer by layer, each layer sorted; two words have equal canonical
words exactly when they lie in the same commutation class.

Full commutativity is tested with Stembridge's conditions: consecutive
elements of a chain ``H_s`` must have a neighbour-labelled element strictly
between them, and no convex chain of length ``m_st`` alternates ``s, t``.

>>> g = CoxeterGraph.from_edges(3, {(0, 1): 3, (1, 2): 3})
>>> canonical_word(heap_from_word(g, (2, 0, 1)))
(0, 2, 1)
>>> is_fc_heap(heap_from_word(g, (0, 1, 0)), g)
False
"""

from __future__ import annotations

__all__ = [
    "CoxeterGraph", "Heap", "heap_from_word", "canonical_word", "dual",
    "is_reduced_heap", "is_fc_heap", "is_alternating", "append_max",
    "commutation_class", "word_is_fc",
]

from bisect import insort
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence


@dataclass(frozen=True)
class CoxeterGraph:
    """Generators ``0 .. size-1``; ``bonds`` holds every pair with ``m_st >= 3``."""
    size: int
    bonds: tuple[tuple[tuple[int, int], int], ...]
    names: tuple[str, ...] = ()
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _m: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = {}
        for (s, t), v in self.bonds:
            if s == t or not (0 <= s < self.size and 0 <= t < self.size):
                raise ValueError(f"bad bond {(s, t)}")
            if v < 3:
                raise ValueError("only bonds with m_st >= 3 are stored")
            m[s, t] = m[t, s] = v
        nbrs = tuple(tuple(sorted(t for t in range(self.size) if (s, t) in m))
                     for s in range(self.size))
        object.__setattr__(self, "_m", m)
        object.__setattr__(self, "neighbors", nbrs)

    @classmethod
    def from_edges(cls, size: int, edges: Mapping[tuple[int, int], int],
                   names: Sequence[str] = ()) -> CoxeterGraph:
        bonds = tuple(sorted(((min(s, t), max(s, t)), m) for (s, t), m in edges.items() if m > 2))
        return cls(size, bonds, tuple(names))

    def m(self, s: int, t: int) -> int:
        if s == t:
            return 1
        return self._m.get((s, t), 2)

    def adjacent(self, s: int, t: int) -> bool:
        return (s, t) in self._m

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [st for st, _ in self.bonds]


@dataclass(frozen=True, eq=False)
class Heap:
    graph: CoxeterGraph
    labels: tuple[int, ...] = ()
    below: tuple[int, ...] = ()
    layers: tuple[int, ...] = ()
    # top element of each chain H_s, or -1
    tops: tuple[int, ...] = ()
    # sorted (layer, label) pairs; the canonical word is their labels
    cf: tuple[tuple[int, int], ...] = ()

    @classmethod
    def empty(cls, graph: CoxeterGraph) -> Heap:
        return cls(graph, tops=(-1,) * graph.size)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, Heap):
            return NotImplemented
        return self.graph == other.graph and self.cf == other.cf

    def __hash__(self):
        return hash(self.cf)

    def __repr__(self):
        return f"Heap({canonical_word(self)!r})"

    def less(self, x: int, y: int) -> bool:
        """Strict order ``x < y``."""
        return x != y and bool(self.below[y] >> x & 1)

    def chain(self, s: int) -> list[int]:
        return [i for i, a in enumerate(self.labels) if a == s]

    def pair_chain(self, s: int, t: int) -> list[int]:
        return [i for i, a in enumerate(self.labels) if a == s or a == t]

    def interval_size(self, x: int, y: int) -> int:
        """Number of z with x <= z <= y."""
        below_y = self.below[y]
        return sum(1 for z in range(x, y + 1) if below_y >> z & 1 and self.below[z] >> x & 1)

    def push(self, s: int) -> Heap:
        """Add a new maximal element labelled ``s`` (no validity check)."""
        g = self.graph
        idx = len(self.labels)
        mask = 1 << idx
        layer = 0
        for t in (s,) + g.neighbors[s]:
            top = self.tops[t]
            if top >= 0:
                mask |= self.below[top]
                layer = max(layer, self.layers[top] + 1)
        tops = list(self.tops)
        tops[s] = idx
        cf = list(self.cf)
        insort(cf, (layer, s))
        return Heap(g, self.labels + (s,), self.below + (mask,), self.layers + (layer,),
                    tuple(tops), tuple(cf))


def heap_from_word(g: CoxeterGraph, word: Sequence[int]) -> Heap:
    h = Heap.empty(g)
    for s in word:
        if not 0 <= s < g.size:
            raise ValueError(f"letter {s} out of range")
        h = h.push(s)
    return h


def canonical_word(h: Heap) -> tuple[int, ...]:
    return tuple(s for _, s in h.cf)


def dual(h: Heap) -> Heap:
    """The heap with the order reversed."""
    return heap_from_word(h.graph, canonical_word(h)[::-1])


def is_reduced_heap(h: Heap, g: CoxeterGraph | None = None) -> bool:
    g = g or h.graph
    for s in range(g.size):
        ch = h.chain(s)
        for x, y in zip(ch, ch[1:]):
            if not any(h.labels[z] in g.neighbors[s] and h.less(x, z) and h.less(z, y)
                       for z in range(x + 1, y)):
                return False
    return True


def _alternating_windows(h: Heap, s: int, t: int, m: int) -> Iterator[tuple[int, int]]:
    ch = h.pair_chain(s, t)
    for i in range(len(ch) - m + 1):
        win = ch[i:i + m]
        if all(h.labels[a] != h.labels[b] for a, b in zip(win, win[1:])):
            yield win[0], win[-1]


def is_fc_heap(h: Heap, g: CoxeterGraph | None = None) -> bool:
    """No convex alternating chain of length ``m_st`` for any bond (heap assumed reduced)."""
    g = g or h.graph
    for (s, t), m in g.bonds:
        for x, y in _alternating_windows(h, s, t, m):
            if h.interval_size(x, y) == m:
                return False
    return True


def is_alternating(h: Heap, g: CoxeterGraph | None = None) -> bool:
    g = g or h.graph
    for s, t in g.edges:
        labs = [h.labels[i] for i in h.pair_chain(s, t)]
        if any(a == b for a, b in zip(labs, labs[1:])):
            return False
    return True


def append_max(h: Heap, s: int, g: CoxeterGraph | None = None) -> Heap | None:
    """
    Extend an FC heap by a maximal ``s``-element, or return None when the
    result is not the heap of a reduced word of an FC element.
    """
    g = g or h.graph
    nbrs = g.neighbors[s]
    prev = h.tops[s]
    if prev >= 0 and not any(h.tops[t] >= 0 and h.below[h.tops[t]] >> prev & 1 for t in nbrs):
        return None
    new = h.push(s)
    x = len(h.labels)
    labels = new.labels
    for t in nbrs:
        m = g.m(s, t)
        # the m-1 elements of H_{s,t} just below x must read t, s, t, ... downwards
        want = t
        found = []
        i = x - 1
        while i >= 0 and len(found) < m - 1:
            a = labels[i]
            if a == s or a == t:
                if a != want:
                    break
                found.append(i)
                want = s if want == t else t
            i -= 1
        if len(found) == m - 1 and new.interval_size(found[-1], x) == m:
            return None
    return new


def commutation_class(g: CoxeterGraph, word: Sequence[int]) -> set[tuple[int, ...]]:
    """All words reachable by swapping adjacent commuting letters."""
    start = tuple(word)
    seen = {start}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a != b and not g.adjacent(a, b):
                v = w[:i] + (b, a) + w[i + 2:]
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def word_is_fc(g: CoxeterGraph, word: Sequence[int]) -> bool:
    """
    Word-level oracle: ``word`` is a reduced word of an FC element iff no word
    in its commutation class contains ``ss`` or an alternating factor of
    length ``m_st``.
    """
    for w in commutation_class(g, word):
        for i in range(len(w) - 1):
            s, t = w[i], w[i + 1]
            if s == t:
                return False
            m = g.m(s, t)
            if m >= 3 and i + m <= len(w) and all(w[i + r] == (s if r % 2 == 0 else t) for r in range(m)):
                return False
    return True
