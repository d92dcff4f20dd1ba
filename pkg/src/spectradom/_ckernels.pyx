"""Compiled kernels: canonical labelling, census sieve, domination, Jacobi.

Semantics match spectradom._pykernels exactly (same search orders, same
floating-point expression trees); only the execution speed differs.
"""

from itertools import permutations

from libc.stdlib cimport calloc, free, malloc
from libc.math cimport fabs, sqrt

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

BACKEND_NAME = "compiled"

OFF_DIAGONAL_TOL = 1e-12
MAX_SWEEPS = 100

cdef double _OFF_TOL = 1e-12
cdef int _MAX_SWEEPS = 100


# -- canonical labelling ----------------------------------------------

cdef struct CanonCtx:
    int n
    int m
    u64 adj[10]
    int chosen[10]
    u64 best


cdef void _canon_rec(CanonCtx* cx, int depth, u64 used, u64 prefix, int nbits):
    cdef int v, i, cnt, a, b, nb
    cdef u64 col, p2, key
    cdef u64 cand[10]
    if depth == cx.n:
        if prefix < cx.best:
            cx.best = prefix
        return
    cnt = 0
    for v in range(cx.n):
        if (used >> v) & 1:
            continue
        col = 0
        for i in range(depth):
            col = (col << 1) | ((cx.adj[v] >> cx.chosen[i]) & 1)
        # pack (column bits, vertex) so a plain integer sort orders
        # candidates by column first, index second
        cand[cnt] = (col << 4) | <u64>v
        cnt += 1
    for a in range(1, cnt):
        key = cand[a]
        b = a - 1
        while b >= 0 and cand[b] > key:
            cand[b + 1] = cand[b]
            b -= 1
        cand[b + 1] = key
    nb = nbits + depth
    for a in range(cnt):
        col = cand[a] >> 4
        v = <int>(cand[a] & 15)
        p2 = (prefix << depth) | col
        if p2 > (cx.best >> (cx.m - nb)):
            break
        cx.chosen[depth] = v
        _canon_rec(cx, depth + 1, used | (<u64>1 << v), p2, nb)


def canon_mask(int n, adj):
    """Smallest triangle mask over all relabellings of the graph."""
    if not 1 <= n <= 10:
        raise ValueError(f"canonical search supports 1..10 vertices, got {n}")
    if n == 1:
        return 0
    cdef CanonCtx cx
    cdef int v, i, j
    cx.n = n
    cx.m = n * (n - 1) // 2
    for v in range(n):
        cx.adj[v] = adj[v]
    cdef u64 ident = 0
    for j in range(1, n):
        for i in range(j):
            ident = (ident << 1) | ((cx.adj[j] >> i) & 1)
    cx.best = ident
    _canon_rec(&cx, 0, 0, 0, 0)
    return cx.best


# -- exhaustive census sieve -------------------------------------------


def sieve_canonical_masks(int n):
    """All canonical triangle masks on n vertices, ascending."""
    if not 1 <= n <= 7:
        raise ValueError(f"census sieve supports 1..7 vertices, got {n}")
    cdef int m = n * (n - 1) // 2
    cdef long total = 1L << m

    perms = list(permutations(range(n)))
    cdef int nperm = len(perms)
    cdef int k, pi, i, j, a, b, ks, nsrc
    cdef long pos, mask
    cdef u64 orb

    # pair index tables for the column-by-column triangle order
    cdef int pair_i[21]
    cdef int pair_j[21]
    cdef int kidx[7][7]
    k = 0
    for j in range(n):
        for i in range(j):
            pair_i[k] = i
            pair_j[k] = j
            kidx[i][j] = k
            k += 1

    cdef int* pt = <int*>malloc(nperm * n * sizeof(int))
    cdef u64* weights = <u64*>calloc(nperm * (m if m > 0 else 1), sizeof(u64))
    cdef unsigned char* dead = <unsigned char*>calloc(total, 1)
    cdef int* src = <int*>malloc((m if m > 0 else 1) * sizeof(int))
    if not pt or not weights or not dead or not src:
        free(pt); free(weights); free(dead); free(src)
        raise MemoryError()

    for pi in range(nperm):
        perm = perms[pi]
        for i in range(n):
            pt[pi * n + i] = perm[i]
    # weights[pi*m + ks] = contribution of source bit ks to the image mask
    for pi in range(nperm):
        for k in range(m):
            a = pt[pi * n + pair_i[k]]
            b = pt[pi * n + pair_j[k]]
            if a > b:
                a, b = b, a
            ks = kidx[a][b]
            weights[pi * m + ks] = (<u64>1) << (m - 1 - k)

    out = []
    pos = 0
    try:
        while pos < total:
            if dead[pos]:
                pos += 1
                continue
            mask = pos
            nsrc = 0
            for k in range(m):
                if (mask >> (m - 1 - k)) & 1:
                    src[nsrc] = k
                    nsrc += 1
            for pi in range(nperm):
                orb = 0
                for k in range(nsrc):
                    orb |= weights[pi * m + src[k]]
                dead[orb] = 1
            if nsrc == 0:
                dead[0] = 1
            out.append(mask)
            pos += 1
    finally:
        free(pt); free(weights); free(dead); free(src)
    return out


# -- domination number -------------------------------------------------

cdef struct DomCtx:
    int n
    u64 full
    u64 cn[64]
    int best_size
    u64 best_set


cdef int _dom_lower_bound(DomCtx* cx, u64 uncovered):
    cdef int cnt = __builtin_popcountll(uncovered)
    cdef int mx = 0, v, c
    if cnt == 0:
        return 0
    for v in range(cx.n):
        c = __builtin_popcountll(cx.cn[v] & uncovered)
        if c > mx:
            mx = c
    return (cnt + mx - 1) // mx


cdef void _dom_rec(DomCtx* cx, u64 chosen, int size, u64 covered):
    cdef u64 uncovered, rest, candidates
    cdef int pick, mn, v, c, w
    if covered == cx.full:
        if size < cx.best_size:
            cx.best_size = size
            cx.best_set = chosen
        return
    uncovered = cx.full & ~covered
    if size + _dom_lower_bound(cx, uncovered) >= cx.best_size:
        return
    pick = -1
    mn = cx.n + 1
    rest = uncovered
    while rest:
        v = __builtin_ctzll(rest)
        rest &= rest - 1
        c = __builtin_popcountll(cx.cn[v])
        if c < mn:
            mn = c
            pick = v
    candidates = cx.cn[pick]
    while candidates:
        w = __builtin_ctzll(candidates)
        candidates &= candidates - 1
        _dom_rec(cx, chosen | (<u64>1 << w), size + 1, covered | cx.cn[w])


def solve_domination(int n, adj):
    """Exact minimum dominating set: returns (gamma, witness mask)."""
    cdef DomCtx cx
    cdef int v, size, best_v, best_gain, gain
    cdef u64 covered, greedy
    cx.n = n
    cx.full = <u64>(~0) if n == 64 else ((<u64>1 << n) - 1)
    for v in range(n):
        cx.cn[v] = <u64>adj[v] | (<u64>1 << v)

    covered = 0
    greedy = 0
    size = 0
    while covered != cx.full:
        best_gain = -1
        best_v = 0
        for v in range(n):
            gain = __builtin_popcountll(cx.cn[v] & ~covered)
            if gain > best_gain:
                best_gain = gain
                best_v = v
        greedy |= <u64>1 << best_v
        covered |= cx.cn[best_v]
        size += 1

    cx.best_size = size
    cx.best_set = greedy
    _dom_rec(&cx, 0, 0, 0)
    return cx.best_size, cx.best_set


# -- cyclic Jacobi eigensolver -----------------------------------------


cdef double _max_offdiag(double[:, ::1] a, int n):
    cdef double mx = 0.0, x
    cdef int i, j
    for i in range(n - 1):
        for j in range(i + 1, n):
            x = fabs(a[i, j])
            if x > mx:
                mx = x
    return mx


def jacobi_inplace(double[:, ::1] a):
    """Diagonalise a symmetric matrix in place by cyclic Jacobi sweeps."""
    cdef int n = a.shape[0]
    cdef int sweeps = 0, p, q, i
    cdef double apq, theta, t, c, s, tau, app, aqq, aip, aiq
    while sweeps < _MAX_SWEEPS:
        if _max_offdiag(a, n) < _OFF_TOL:
            return True, sweeps
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                app = a[p, p]
                aqq = a[q, q]
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = aip - s * (aiq + tau * aip)
                    a[p, i] = a[i, p]
                    a[i, q] = aiq + s * (aip - tau * aiq)
                    a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
    return _max_offdiag(a, n) < _OFF_TOL, sweeps
