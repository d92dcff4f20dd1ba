import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from spectradom.canonical import (
    CANONICAL_MAX_VERTICES,
    canonical_form,
    canonical_graph,
    canonical_mask,
    is_isomorphic,
)
from spectradom.graphs import (
    complete,
    cycle,
    disjoint_union,
    empty,
    from_edges,
    path,
    star,
)

from conftest import random_graph, random_permuted_copy, to_networkx


def relabelings(g):
    """Every labelled copy of g; only called for tiny n."""
    for perm in permutations(range(g.n)):
        yield from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_invariant_under_relabeling_exhaustive():
    for g in (path(4), cycle(5), star(5), disjoint_union(complete(3), empty(2))):
        forms = {canonical_form(h) for h in relabelings(g)}
        assert len(forms) == 1


def test_invariant_under_relabeling_random():
    rng = random.Random(0xCA)
    for _ in range(200):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.random())
        h = random_permuted_copy(rng, g)
        assert canonical_form(g) == canonical_form(h)


@given(st.data())
def test_invariant_under_relabeling_property(data):
    n = data.draw(st.integers(min_value=1, max_value=7))
    tri = data.draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    perm = data.draw(st.permutations(range(n)))
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            if tri >> k & 1:
                edges.append((row, col))
            k += 1
    g = from_edges(n, edges)
    h = from_edges(n, [(perm[u], perm[v]) for u, v in edges])
    assert canonical_form(g) == canonical_form(h)


def test_canonical_graph_is_fixed_point():
    rng = random.Random(0xCB)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 8))
        c = canonical_graph(g)
        assert canonical_graph(c) == c
        assert canonical_form(c) == canonical_form(g)


def test_class_count_from_labelled_graphs():
    # all 64 labelled graphs on 4 vertices fall into 11 classes
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    forms = set()
    for mask in range(64):
        edges = [pairs[i] for i in range(6) if mask >> i & 1]
        forms.add(canonical_form(from_edges(4, edges)))
    assert len(forms) == 11


def test_form_separates_nonisomorphic(census):
    for n, graphs in census.items():
        forms = {canonical_form(g) for g in graphs}
        assert len(forms) == len(graphs)


def test_canonical_graph_matches_mask():
    # re-encode the canonical graph's upper triangle column by column,
    # first pair in the most significant bit; must equal canonical_mask
    g = canonical_graph(cycle(6))
    tri = 0
    for col in range(1, g.n):
        for row in range(col):
            tri = (tri << 1) | (1 if g.has_edge(row, col) else 0)
    assert canonical_mask(g) == tri


def test_is_isomorphic_agrees_with_networkx():
    rng = random.Random(0xCC)
    for _ in range(150):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.random())
        h = random_graph(rng, n, rng.random())
        expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
        assert is_isomorphic(g, h) == expected


def test_is_isomorphic_trivia():
    assert is_isomorphic(path(3), from_edges(3, [(1, 2), (0, 2)]))
    assert not is_isomorphic(path(3), cycle(3))
    assert not is_isomorphic(path(3), path(4))
    # same degree sequence, different graphs
    a = disjoint_union(cycle(3), cycle(3))
    b = cycle(6)
    assert not is_isomorphic(a, b)


def test_vertex_cap():
    big = empty(CANONICAL_MAX_VERTICES + 1)
    with pytest.raises(ValueError):
        canonical_form(big)
    # at the cap itself it still works
    assert canonical_form(empty(CANONICAL_MAX_VERTICES))
