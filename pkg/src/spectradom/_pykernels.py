"""Pure-python kernels: canonical labelling, census sieve, domination, Jacobi.

Fallback implementations of the hot loops, used when the compiled
extension is unavailable (see spectradom.backend).  Every function here
is semantically identical to its compiled twin, down to floating-point
operation order in the eigensolver, so both backends give bit-identical
results.
"""

from __future__ import annotations

import math
from itertools import permutations

import numpy as np

BACKEND_NAME = "python"

OFF_DIAGONAL_TOL = 1e-12
MAX_SWEEPS = 100


# -- canonical labelling ----------------------------------------------
#
# The canonical form of a labelled graph is the lexicographically
# smallest upper-triangle bit string over all n! relabellings, where the
# triangle is read column by column (x_{0,1}, x_{0,2}, x_{1,2}, ...).
# Internally the string is an m-bit int, m = n(n-1)/2, with the first
# triangle bit stored as the most significant bit, so integer order
# coincides with lexicographic order.


def canon_mask(n: int, adj) -> int:
    """Smallest triangle mask over all relabellings of the graph.

    adj is a sequence of neighbourhood bitmasks.  Branch and bound over
    partial labellings: vertices are placed one at a time, candidates
    ordered by the column of adjacency bits they would contribute, and a
    partial labelling is abandoned as soon as its prefix exceeds the
    matching prefix of the best complete labelling found so far.
    """
    if not 1 <= n <= 10:
        raise ValueError(f"canonical search supports 1..10 vertices, got {n}")
    m = n * (n - 1) // 2
    if n == 1:
        return 0

    # identity labelling seeds the incumbent
    ident = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            ident = (ident << 1) | ((row >> i) & 1)
    best = ident

    chosen = [0] * n

    def rec(depth: int, used: int, prefix: int, nbits: int) -> None:
        nonlocal best
        if depth == n:
            if prefix < best:
                best = prefix
            return
        cand = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            col = 0
            row = adj[v]
            for i in range(depth):
                col = (col << 1) | ((row >> chosen[i]) & 1)
            cand.append((col, v))
        cand.sort()
        nb = nbits + depth
        for col, v in cand:
            p2 = (prefix << depth) | col
            # candidates are sorted, so once a prefix is too big all
            # remaining ones are too
            if p2 > (best >> (m - nb)):
                break
            chosen[depth] = v
            rec(depth + 1, used | (1 << v), p2, nb)

    rec(0, 0, 0, 0)
    return best


# -- exhaustive census sieve -------------------------------------------


def sieve_canonical_masks(n: int) -> list[int]:
    """All canonical triangle masks on n vertices, ascending.

    Walks the 2^m labelled masks in increasing order.  A mask that has
    not been marked dead is the minimum of its isomorphism orbit, hence
    canonical; its whole orbit is then marked via precomputed
    permutation bit-relocation tables.
    """
    if not 1 <= n <= 7:
        raise ValueError(f"census sieve supports 1..7 vertices, got {n}")
    m = n * (n - 1) // 2
    total = 1 << m

    pairs = [(i, j) for j in range(n) for i in range(j)]
    index = {pair: k for k, pair in enumerate(pairs)}
    perms = list(permutations(range(n)))
    # weights[p, ks] = contribution of source triangle bit ks to the
    # relabelled mask under permutation p
    weights = np.zeros((len(perms), max(m, 1)), dtype=np.int64)
    for pi, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            weights[pi, index[(a, b)]] = 1 << (m - 1 - k)

    dead = np.zeros(total, dtype=bool)
    out: list[int] = []
    pos = 0
    chunk = 8192
    while pos < total:
        if dead[pos]:
            pos += 1
            while pos < total:
                view = dead[pos:pos + chunk]
                if view.all():
                    pos += len(view)
                else:
                    pos += int(np.argmax(~view))
                    break
            continue
        mask = pos
        src = [k for k in range(m) if (mask >> (m - 1 - k)) & 1]
        if src:
            orbit = weights[:, src].sum(axis=1)
            dead[orbit] = True
        else:
            dead[0] = True
        out.append(mask)
        pos += 1
    return out


# -- domination number -------------------------------------------------


def solve_domination(n: int, adj) -> tuple[int, int]:
    """Exact minimum dominating set: returns (gamma, witness mask).

    Branch and bound on closed neighbourhoods.  A greedy cover seeds the
    incumbent; branching picks an uncovered vertex with the fewest
    closed-neighbourhood members (lowest index on ties) and tries each
    of its closed neighbours in ascending order.  The bound is
    ceil(uncovered / best single-vertex coverage).  Branches that cannot
    strictly improve are pruned, so the returned witness is the unique
    optimum encountered under this fixed order: deterministic.
    """
    full = (1 << n) - 1
    cn = [adj[v] | (1 << v) for v in range(n)]

    covered = 0
    greedy = 0
    greedy_size = 0
    while covered != full:
        best_gain = -1
        best_v = 0
        for v in range(n):
            gain = (cn[v] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        greedy |= 1 << best_v
        covered |= cn[best_v]
        greedy_size += 1

    best_size = greedy_size
    best_set = greedy

    def lower_bound(uncovered: int) -> int:
        cnt = uncovered.bit_count()
        if cnt == 0:
            return 0
        mx = 0
        for v in range(n):
            c = (cn[v] & uncovered).bit_count()
            if c > mx:
                mx = c
        return (cnt + mx - 1) // mx

    def rec(chosen: int, size: int, covered: int) -> None:
        nonlocal best_size, best_set
        if covered == full:
            if size < best_size:
                best_size = size
                best_set = chosen
            return
        uncovered = full & ~covered
        if size + lower_bound(uncovered) >= best_size:
            return
        pick = -1
        mn = n + 1
        rest = uncovered
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            c = cn[v].bit_count()
            if c < mn:
                mn = c
                pick = v
        cand = cn[pick]
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            rec(chosen | (1 << w), size + 1, covered | cn[w])

    rec(0, 0, 0)
    return best_size, best_set


# -- cyclic Jacobi eigensolver -----------------------------------------


def _max_offdiag(a: np.ndarray) -> float:
    n = a.shape[0]
    if n < 2:
        return 0.0
    iu = np.triu_indices(n, 1)
    return float(np.abs(a[iu]).max())


def jacobi_inplace(a: np.ndarray) -> tuple[bool, int]:
    """Diagonalise a symmetric matrix in place by cyclic Jacobi sweeps.

    Returns (converged, sweeps).  Converged means every off-diagonal
    magnitude fell below 1e-12; at most 100 full sweeps are attempted.
    Rotation angles follow the stable half-angle formulation.  The
    vectorised column updates evaluate the same expression tree as the
    compiled scalar loop, so both produce identical doubles.
    """
    n = a.shape[0]
    sweeps = 0
    # theta*theta may overflow to inf for vanishing off-diagonal entries;
    # IEEE then gives t = 1/inf = 0, a near-identity rotation that still
    # zeroes the entry.  That matches the compiled backend, so silence
    # numpy's overflow warning rather than change the arithmetic.
    with np.errstate(over="ignore"):
        while sweeps < MAX_SWEEPS:
            if _max_offdiag(a) < OFF_DIAGONAL_TOL:
                return True, sweeps
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    tau = s / (1.0 + c)
                    app = a[p, p]
                    aqq = a[q, q]
                    colp = a[:, p].copy()
                    colq = a[:, q].copy()
                    newp = colp - s * (colq + tau * colp)
                    newq = colq + s * (colp - tau * colq)
                    a[:, p] = newp
                    a[p, :] = newp
                    a[:, q] = newq
                    a[q, :] = newq
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
            sweeps += 1
        return _max_offdiag(a) < OFF_DIAGONAL_TOL, sweeps
