import random

import pytest

from spectradom.domination import DominationResult, domination_number, is_dominating
from spectradom.graphs import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    mask_from,
    path,
    popcount,
    star,
)

from conftest import oracle_domination_number, random_graph


def test_is_dominating_examples():
    c5 = cycle(5)
    assert is_dominating(c5, mask_from([0, 2]))
    assert not is_dominating(c5, mask_from([0, 1]))
    assert is_dominating(c5, c5.full_mask())
    assert not is_dominating(c5, 0)
    # isolated vertices dominate only themselves
    g = empty(3)
    assert is_dominating(g, 0b111)
    assert not is_dominating(g, 0b011)


def test_is_dominating_rejects_stray_bits():
    with pytest.raises(ValueError):
        is_dominating(path(3), 0b1000)


def test_known_values():
    assert domination_number(complete(1)).gamma == 1
    assert domination_number(complete(6)).gamma == 1
    assert domination_number(star(7)).gamma == 1
    assert domination_number(empty(5)).gamma == 5
    assert domination_number(cycle(5)).gamma == 2
    assert domination_number(cycle(7)).gamma == 3
    assert domination_number(path(7)).gamma == 3
    assert domination_number(complete_bipartite(2, 3)).gamma == 2
    # gamma(P_n) = ceil(n/3)
    for n in range(1, 13):
        assert domination_number(path(n)).gamma == -(-n // 3)


def test_witness_is_optimal_dominating_set():
    rng = random.Random(0xD0)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        res = domination_number(g)
        assert isinstance(res, DominationResult)
        assert popcount(res.witness) == res.gamma
        assert is_dominating(g, res.witness)
        assert sorted(res.witness_vertices()) == list(res.witness_vertices())


def test_matches_brute_force_on_census(small_census):
    for graphs in small_census.values():
        for g in graphs:
            assert domination_number(g).gamma == oracle_domination_number(g)


def test_matches_brute_force_random_larger():
    rng = random.Random(0xD1)
    for _ in range(120):
        n = rng.randint(8, 12)
        g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.8]))
        assert domination_number(g).gamma == oracle_domination_number(g)


def test_deterministic_witness():
    rng = random.Random(0xD2)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 9))
        a = domination_number(g)
        b = domination_number(g)
        assert a == b
