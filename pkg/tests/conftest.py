"""Shared fixtures and independent oracles.

Oracles here deliberately avoid the package's own kernels: domination
by exhaustive subset search, eigenvalues via numpy.linalg, graph6 and
isomorphism via networkx.  Tests compare package output against these.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from spectradom import Graph, enumerate_nonisomorphic, from_edges


# -- independent oracles -------------------------------------------------


def oracle_domination_number(g: Graph) -> int:
    """Smallest k whose k-subsets contain a dominating set; brute force."""
    n = g.n
    full = (1 << n) - 1
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            cover = 0
            for v in subset:
                cover |= closed[v]
            if cover == full:
                return k
    raise AssertionError("unreachable: V dominates itself")


def oracle_eigenvalues(matrix) -> np.ndarray:
    return np.linalg.eigvalsh(np.asarray(matrix, dtype=float))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edges(n, edges)


def random_permuted_copy(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return from_edges(
        g.n, [(perm[u], perm[v]) for u, v in g.edges()]
    )


# -- fixtures ------------------------------------------------------------


@pytest.fixture(scope="session")
def census():
    """All non-isomorphic graphs keyed by n, n = 1..7."""
    return {n: list(enumerate_nonisomorphic(n)) for n in range(1, 8)}


@pytest.fixture(scope="session")
def small_census(census):
    """The n <= 6 slice, for quadratic-cost exhaustive tests."""
    return {n: census[n] for n in range(1, 7)}
