"""Laplacian and signless Laplacian spectra via an in-package eigensolver.

For a graph with degree matrix D and adjacency matrix A, the Laplacian
is L = D - A and the signless Laplacian is Q = D + A.  Both are real
symmetric positive semidefinite; mu(G) and q(G) denote their largest
eigenvalues.  Eigenvalues come from cyclic Jacobi sweeps (no external
eigensolver in the package; tests cross-check against one), which for
the integer matrices of order <= 64 used here converges far below the
1e-9 accuracy the verification tolerances assume.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .graphs import Graph

OFF_DIAGONAL_TOL = backend.OFF_DIAGONAL_TOL
MAX_SWEEPS = backend.MAX_SWEEPS


class JacobiConvergenceError(RuntimeError):
    """Jacobi sweeps failed to converge; a bug, not a data condition."""


def laplacian(g: Graph) -> np.ndarray:
    n = g.n
    m = np.zeros((n, n))
    for v in range(n):
        row = g.adj[v]
        m[v, v] = row.bit_count()
        for u in range(n):
            if (row >> u) & 1:
                m[v, u] = -1.0
    return m


def signless_laplacian(g: Graph) -> np.ndarray:
    m = laplacian(g)
    return np.abs(m)


def eigen_spectrum(matrix: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending.

    The input must be exactly symmetric (these matrices are integer
    valued, so no tolerance is appropriate); asymmetry raises
    ValueError.  Non-convergence after 100 sweeps raises
    JacobiConvergenceError.
    """
    a = np.array(matrix, dtype=np.float64, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    converged, sweeps = backend.jacobi_inplace(a)
    if not converged:
        raise JacobiConvergenceError(
            f"off-diagonal mass above {OFF_DIAGONAL_TOL} after {sweeps} sweeps"
        )
    return np.sort(np.diagonal(a).copy())


def eigen_max(matrix: np.ndarray) -> float:
    return float(eigen_spectrum(matrix)[-1])


def mu(g: Graph) -> float:
    """Largest Laplacian eigenvalue."""
    return eigen_max(laplacian(g))


def q(g: Graph) -> float:
    """Largest signless Laplacian eigenvalue."""
    return eigen_max(signless_laplacian(g))


@dataclass(frozen=True)
class SpectralSummary:
    mu: float
    q: float
    max_degree: int
    avg_degree: float
    laplacian_spectrum: tuple[float, ...]
    signless_spectrum: tuple[float, ...]


def summary(g: Graph) -> SpectralSummary:
    lap = eigen_spectrum(laplacian(g))
    sig = eigen_spectrum(signless_laplacian(g))
    return SpectralSummary(
        mu=float(lap[-1]),
        q=float(sig[-1]),
        max_degree=g.max_degree(),
        avg_degree=g.avg_degree(),
        laplacian_spectrum=tuple(float(x) for x in lap),
        signless_spectrum=tuple(float(x) for x in sig),
    )


def neighborhood_union_bound(g: Graph) -> float:
    """max |N(u) u N(v)| over edges uv; needs at least one edge."""
    best = 0
    seen = False
    for u, v in g.edges():
        seen = True
        size = (g.adj[u] | g.adj[v]).bit_count()
        if size > best:
            best = size
    if not seen:
        raise ValueError("neighbourhood union bound needs at least one edge")
    return float(best)
