import math
import random

import numpy as np
import pytest

from spectradom.graphs import (
    cocktail_party,
    complete,
    complete_bipartite,
    cycle,
    empty,
    path,
    star,
)
from spectradom.spectral import (
    JacobiConvergenceError,
    eigen_max,
    eigen_spectrum,
    laplacian,
    mu,
    neighborhood_union_bound,
    q,
    signless_laplacian,
    summary,
)

from conftest import oracle_eigenvalues, random_graph

EIG_TOL = 1e-9


def test_matrix_shapes_and_entries():
    g = path(3)
    l = laplacian(g)
    ql = signless_laplacian(g)
    assert l.tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    assert ql.tolist() == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    # row sums: 0 for L, twice the degree for Q
    assert np.allclose(l.sum(axis=1), 0)
    assert np.allclose(ql.sum(axis=1), 2 * np.array(g.degrees()))


def test_spectrum_against_numpy(small_census):
    for graphs in small_census.values():
        for g in graphs:
            for m in (laplacian(g), signless_laplacian(g)):
                ours = eigen_spectrum(m)
                ref = oracle_eigenvalues(m)
                assert np.max(np.abs(ours - ref)) < EIG_TOL


def test_spectrum_against_numpy_random():
    rng = random.Random(0x5E)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 16), rng.random())
        ours = eigen_spectrum(laplacian(g))
        ref = oracle_eigenvalues(laplacian(g))
        assert np.max(np.abs(ours - ref)) < EIG_TOL


def test_analytic_values():
    # mu(K_n) = n
    for n in range(2, 21):
        assert abs(mu(complete(n)) - n) < EIG_TOL
    # mu(K_{a,b}) = a + b
    assert abs(mu(complete_bipartite(2, 3)) - 5) < EIG_TOL
    assert abs(mu(complete_bipartite(4, 4)) - 8) < EIG_TOL
    # mu(P_n) = 2 + 2 cos(pi/n)
    for n in range(2, 12):
        assert abs(mu(path(n)) - (2 + 2 * math.cos(math.pi / n))) < EIG_TOL
    # mu(C_n) = 2 - 2 cos(2 pi floor(n/2) / n)
    for n in range(3, 12):
        expect = 2 - 2 * math.cos(2 * math.pi * (n // 2) / n)
        assert abs(mu(cycle(n)) - expect) < EIG_TOL
    # mu(K_{1,n-1}) = n
    assert abs(mu(star(8)) - 8) < EIG_TOL
    # q(K_n) = 2(n-1); q of a k-regular bipartite graph is 2k
    for n in range(2, 12):
        assert abs(q(complete(n)) - 2 * (n - 1)) < EIG_TOL
    assert abs(q(cycle(6)) - 4) < EIG_TOL
    # C_5 is regular but odd, so q stays below 2 * Delta of bipartite case
    assert abs(q(cycle(5)) - 4) < EIG_TOL
    # cocktail party K_{k x 2} is (2k-2)-regular with q = 2(2k-2)
    for k in range(2, 6):
        assert abs(q(cocktail_party(k)) - 2 * (2 * k - 2)) < EIG_TOL


def test_edgeless_graphs():
    g = empty(4)
    assert mu(g) == pytest.approx(0, abs=EIG_TOL)
    assert q(g) == pytest.approx(0, abs=EIG_TOL)
    with pytest.raises(ValueError):
        neighborhood_union_bound(g)


def test_bipartite_spectra_coincide():
    # L and Q are similar for bipartite graphs, so mu = q
    rng = random.Random(0x5F)
    for _ in range(60):
        a = rng.randint(1, 5)
        b = rng.randint(1, 5)
        g = complete_bipartite(a, b)
        assert abs(mu(g) - q(g)) < 1e-8
    for n in range(2, 11):
        assert abs(mu(path(n)) - q(path(n))) < 1e-8


def test_eigen_spectrum_validation():
    with pytest.raises(ValueError):
        eigen_spectrum(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        eigen_spectrum(np.array([[0.0, 1.0], [0.5, 0.0]]))  # asymmetric


def test_eigen_spectrum_properties():
    rng = random.Random(0x60)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 12))
        lap = laplacian(g)
        vals = eigen_spectrum(lap)
        assert list(vals) == sorted(vals)
        # trace preserved, all eigenvalues nonnegative (PSD)
        assert abs(vals.sum() - np.trace(lap)) < 1e-8
        assert vals[0] > -EIG_TOL
        assert eigen_max(lap) == pytest.approx(vals[-1])
        # input must come back unchanged
        assert np.array_equal(lap, laplacian(g))


def test_mu_never_exceeds_q():
    rng = random.Random(0x61)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert mu(g) <= q(g) + EIG_TOL


def test_neighborhood_union_bound():
    # P_4: the middle edge sees every vertex
    assert neighborhood_union_bound(path(4)) == 4
    assert neighborhood_union_bound(complete(5)) == 5
    assert neighborhood_union_bound(star(6)) == 6
    assert neighborhood_union_bound(cycle(6)) == 4


def test_summary_consistent():
    g = cycle(5)
    s = summary(g)
    assert s.mu == pytest.approx(mu(g))
    assert s.q == pytest.approx(q(g))
    assert s.max_degree == 2
    assert s.avg_degree == pytest.approx(2.0)
    assert s.laplacian_spectrum[-1] == pytest.approx(s.mu)
    assert s.signless_spectrum[-1] == pytest.approx(s.q)
    assert s.q == pytest.approx(4.0)


def test_convergence_error_is_exported():
    assert issubclass(JacobiConvergenceError, RuntimeError)
