from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fcaffine.coxeter import AffineType, graph, iter_fc_layers
from fcaffine.heaps import (
    CoxeterGraph, Heap, append_max, canonical_word, commutation_class, dual,
    heap_from_word, is_alternating, is_fc_heap, is_reduced_heap, word_is_fc,
)


@st.composite
def graphs_and_words(draw, max_size=5, max_len=8):
    size = draw(st.integers(2, max_size))
    pairs = [(s, t) for s in range(size) for t in range(s + 1, size)]
    edges = {p: draw(st.sampled_from((2, 2, 3, 3, 4, 5, 6))) for p in pairs}
    g = CoxeterGraph.from_edges(size, edges)
    word = draw(st.lists(st.integers(0, size - 1), max_size=max_len))
    return g, tuple(word)


def build(g, word):
    h = Heap.empty(g)
    for s in word:
        h = append_max(h, s)
        if h is None:
            return None
    return h


def test_graph_validation():
    with pytest.raises(ValueError):
        CoxeterGraph(2, (((0, 1), 2),))
    with pytest.raises(ValueError):
        CoxeterGraph(2, (((0, 0), 3),))
    g = CoxeterGraph.from_edges(3, {(0, 1): 4, (1, 2): 2})
    assert g.m(0, 1) == g.m(1, 0) == 4
    assert g.m(1, 2) == 2 and g.m(2, 2) == 1
    assert g.edges == [(0, 1)]


def test_heap_order_and_canonical_word():
    g = CoxeterGraph.from_edges(3, {(0, 1): 3, (1, 2): 3})
    h = heap_from_word(g, (0, 2, 1, 0))
    assert canonical_word(h) == (0, 2, 1, 0)
    assert h.less(0, 2) and h.less(1, 2) and h.less(0, 3)
    assert not h.less(0, 1) and not h.less(2, 0)
    assert h.interval_size(0, 3) == 3
    assert h == heap_from_word(g, (2, 0, 1, 0))
    with pytest.raises(ValueError):
        heap_from_word(g, (3,))


@settings(max_examples=300, deadline=None)
@given(graphs_and_words())
def test_incremental_build_matches_word_oracle(gw):
    g, word = gw
    h = build(g, word)
    assert (h is not None) == word_is_fc(g, word)
    if h is not None:
        assert canonical_word(h) in commutation_class(g, word)


@settings(max_examples=300, deadline=None)
@given(graphs_and_words())
def test_heap_predicates_match_word_oracle(gw):
    g, word = gw
    h = heap_from_word(g, word)
    assert (is_reduced_heap(h) and is_fc_heap(h)) == word_is_fc(g, word)


@settings(max_examples=200, deadline=None)
@given(graphs_and_words())
def test_canonical_word_is_a_class_invariant(gw):
    g, word = gw
    cls = commutation_class(g, word)
    canon = {canonical_word(heap_from_word(g, w)) for w in cls}
    assert len(canon) == 1
    assert canon.pop() in cls


@settings(max_examples=200, deadline=None)
@given(graphs_and_words())
def test_dual_properties(gw):
    g, word = gw
    h = heap_from_word(g, word)
    assert dual(dual(h)) == h
    assert dual(h) == heap_from_word(g, word[::-1])
    assert len(dual(h)) == len(h)
    assert is_alternating(dual(h)) == is_alternating(h)
    assert word_is_fc(g, word) == word_is_fc(g, word[::-1])


def _filtered_counts(g, max_len):
    out = []
    for l in range(max_len + 1):
        classes = set()
        for w in product(range(g.size), repeat=l):
            if word_is_fc(g, w):
                classes.add(canonical_word(heap_from_word(g, w)))
        out.append(len(classes))
    return out


@pytest.mark.parametrize("g,max_len", [
    (CoxeterGraph.from_edges(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3}), 8),
    (graph(AffineType("A", 3)), 6),
    (graph(AffineType("C", 2)), 7),
])
def test_census_equals_filtered_enumeration(g, max_len):
    census = [len(layer) for layer in iter_fc_layers(g, max_len)]
    assert census == _filtered_counts(g, max_len)


def test_small_examples():
    g = CoxeterGraph.from_edges(2, {(0, 1): 4})
    assert word_is_fc(g, (0, 1, 0))
    assert not word_is_fc(g, (0, 1, 0, 1))
    assert not word_is_fc(g, (0, 0))
    assert build(g, (0, 1, 0, 1)) is None
    assert is_alternating(heap_from_word(g, (0, 1, 0)))
    assert not is_alternating(heap_from_word(CoxeterGraph.from_edges(3, {(0, 1): 3, (1, 2): 3}), (0, 2, 0)))
