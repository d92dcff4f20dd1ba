"""Canonical forms and isomorphism testing for small graphs.

The canonical form of a graph is the lexicographically smallest
upper-triangle adjacency bit string over all n! relabellings, packed as
bytes([n]) followed by the triangle bits MSB-first.  Exact and brute
force, so capped at 10 vertices; two graphs on at most 10 vertices are
isomorphic iff their canonical forms are equal bytes.
"""

from __future__ import annotations

from . import backend
from .graphs import Graph

CANONICAL_MAX_VERTICES = 10


def triangle_mask(g: Graph) -> int:
    """Upper triangle of g's adjacency matrix as an int, current labels.

    Column-by-column order (x_{0,1}, x_{0,2}, x_{1,2}, ...) with the
    first bit most significant, so integer comparison of masks is
    lexicographic comparison of triangle strings.
    """
    mask = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            mask = (mask << 1) | ((row >> i) & 1)
    return mask


def graph_from_triangle_mask(n: int, mask: int) -> Graph:
    m = n * (n - 1) // 2
    if mask >> m:
        raise ValueError(f"mask has more than {m} bits for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> (m - 1 - k)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def canonical_mask(g: Graph) -> int:
    if g.n > CANONICAL_MAX_VERTICES:
        raise ValueError(
            f"canonical form is exact brute force, capped at "
            f"{CANONICAL_MAX_VERTICES} vertices (got {g.n})"
        )
    return backend.canon_mask(g.n, g.adj)


def canonical_form(g: Graph) -> bytes:
    """bytes([n]) + packed canonical triangle bits (zero padded)."""
    mask = canonical_mask(g)
    m = g.n * (g.n - 1) // 2
    nbytes = (m + 7) // 8
    packed = (mask << (8 * nbytes - m)).to_bytes(nbytes, "big")
    return bytes([g.n]) + packed


def canonical_graph(g: Graph) -> Graph:
    """Canonically relabelled copy of g."""
    return graph_from_triangle_mask(g.n, canonical_mask(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs on at most 10 vertices."""
    if g.n != h.n:
        return False
    if g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_mask(g) == canonical_mask(h)
