"""Bitset-backed simple graphs on at most 64 vertices.

Vertices are integers 0..n-1.  A vertex set is a plain int bitmask, and
the adjacency structure is one bitmask per vertex, so neighbourhood
unions, intersections, and complements are single integer operations.
All graphs are undirected and loop-free; instances are immutable after
construction and safe to share across threads and worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 64


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def format_vertex_set(mask: int) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


class Graph:
    """Immutable undirected simple graph on n <= 64 vertices.

    adj[v] is the open-neighbourhood bitmask of v.  The constructor
    validates symmetry, absence of loops, and that no mask has bits at
    or above n; invalid input raises ValueError.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        rows = tuple(adj)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(rows) != n:
            raise ValueError(f"adjacency has {len(rows)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for u in range(n):
            ru = rows[u]
            for v in range(u + 1, n):
                if ((ru >> v) & 1) != ((rows[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows

    # -- basic queries -------------------------------------------------

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: ({u},{v}) with n={self.n}")
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in bits(rest):
                yield u, u + 1 + off

    def max_degree(self) -> int:
        return max(self.degrees())

    def avg_degree(self) -> float:
        return 2.0 * self.edge_count() / self.n

    def is_regular(self) -> bool:
        degs = self.degrees()
        return min(degs) == max(degs)

    # -- dunder support ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


# -- constructors ------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; rejects loops and bad endpoints."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on n vertices: centre 0 joined to 1..n-1."""
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise ValueError(f"parts must be nonempty, got ({a},{b})")
    n = a + b
    left = (1 << a) - 1
    right = ((1 << n) - 1) ^ left
    return Graph(n, [right] * a + [left] * b)


def cocktail_party(k: int) -> Graph:
    """Complete multipartite K_{2,2,...,2} on 2k vertices.

    The complement of a perfect matching: vertex 2i is joined to
    everything except its partner 2i+1.
    """
    if k < 1:
        raise ValueError(f"need k >= 1 pairs, got {k}")
    n = 2 * k
    full = (1 << n) - 1
    adj = []
    for v in range(n):
        partner = v ^ 1
        adj.append(full ^ (1 << v) ^ (1 << partner))
    return Graph(n, adj)


_FAMILIES = {
    "empty": (empty, 1),
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cocktail_party": (cocktail_party, 1),
}


def construct(family: str, *params: int) -> Graph:
    """Dispatch to a named constructor, e.g. construct("cycle", 5)."""
    try:
        fn, arity = _FAMILIES[family]
    except KeyError:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {family!r}; known: {known}") from None
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# -- derived graphs ----------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    return Graph(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)])


def with_edge(g: Graph, u: int, v: int) -> Graph:
    """Copy of g with edge uv added (uv must not already be present)."""
    if u == v or g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not a missing edge")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by h with h's vertices shifted up by g.n."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"union has {n} > {MAX_VERTICES} vertices")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, adj)


def add_isolated(g: Graph, k: int) -> Graph:
    """g plus k extra isolated vertices (k = 0 returns g itself)."""
    if k < 0:
        raise ValueError(f"cannot add {k} vertices")
    if k == 0:
        return g
    return disjoint_union(g, empty(k))


def induced_subgraph(g: Graph, vertex_mask: int) -> Graph:
    """Subgraph induced on the masked vertices, relabelled 0..k-1.

    Vertices keep their relative order: the i-th lowest set bit of
    vertex_mask becomes vertex i.
    """
    if vertex_mask & ~g.full_mask() or vertex_mask == 0:
        raise ValueError("vertex mask must be a nonempty subset of the vertex set")
    keep = list(bits(vertex_mask))
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & vertex_mask):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(keep), adj)


# -- connectivity ------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by lowest vertex."""
    seen = 0
    out = []
    full = g.full_mask()
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def isolated_mask(g: Graph) -> int:
    m = 0
    for v, row in enumerate(g.adj):
        if row == 0:
            m |= 1 << v
    return m


# -- neighbourhood sets ------------------------------------------------


def neighborhood_union(g: Graph, u: int, v: int) -> int:
    """N(u) | N(v) as a mask (endpoints included only if adjacent)."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range: ({u},{v})")
    return g.adj[u] | g.adj[v]


def duv_set(g: Graph, u: int, v: int) -> int:
    """Vertices dominated by no neighbour of the edge uv, plus u and v.

    Defined for adjacent u, v: the complement of N(u) | N(v) together
    with {u, v} itself.  Always contains u and v.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) must be an edge")
    return (g.full_mask() & ~(g.adj[u] | g.adj[v])) | (1 << u) | (1 << v)


def du_set(g: Graph, u: int) -> int:
    """Vertices outside the open neighbourhood of u (u included)."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    return g.full_mask() & ~g.adj[u]
