"""Compare the compiled and pure-python kernel backends.

Times the four hot kernels on identical workloads and verifies both
backends return identical results while at it.  Run directly:

    python3 bench/benchmark_backends.py [--n 7]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spectradom import _pykernels
from spectradom.canonical import graph_from_triangle_mask
from spectradom.spectral import laplacian

try:
    from spectradom import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_sieve(kern, n):
    return timed(kern.sieve_canonical_masks, n)


def bench_canon(kern, graphs):
    def run():
        return [kern.canon_mask(g.n, g.adj) for g in graphs]

    return timed(run)


def bench_domination(kern, graphs):
    def run():
        return [kern.solve_domination(g.n, g.adj) for g in graphs]

    return timed(run)


def bench_jacobi(kern, matrices):
    def run():
        out = []
        for m in matrices:
            a = m.copy()
            kern.jacobi_inplace(a)
            out.append(np.sort(np.diagonal(a)))
        return out

    return timed(run)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7, help="census size (<= 7)")
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled backend not built; showing pure-python numbers only")

    masks = _pykernels.sieve_canonical_masks(args.n)
    graphs = [graph_from_triangle_mask(args.n, m) for m in masks]
    matrices = [laplacian(g) for g in graphs]
    print(f"workload: {len(graphs)} non-isomorphic graphs on {args.n} vertices")
    print(f"{'kernel':<22} {'pure':>10} {'compiled':>10} {'speedup':>9}")

    rows = [
        ("sieve_canonical_masks", bench_sieve, (args.n,)),
        ("canon_mask", bench_canon, (graphs,)),
        ("solve_domination", bench_domination, (graphs,)),
        ("jacobi_inplace", bench_jacobi, (matrices,)),
    ]
    for name, bench, payload in rows:
        py_out, py_t = bench(_pykernels, *payload)
        if _ckernels is None:
            print(f"{name:<22} {py_t:>9.3f}s {'-':>10} {'-':>9}")
            continue
        c_out, c_t = bench(_ckernels, *payload)
        if name == "jacobi_inplace":
            same = all(np.array_equal(a, b) for a, b in zip(py_out, c_out))
        else:
            same = py_out == c_out
        flag = "" if same else "  RESULTS DIFFER"
        print(f"{name:<22} {py_t:>9.3f}s {c_t:>9.3f}s {py_t / c_t:>8.1f}x{flag}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
