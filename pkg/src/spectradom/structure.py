"""Structural machinery behind the equality characterizations.

Three families matter:

  * B-plus graphs: start from a complete bipartite graph B with parts
    U, W (both of size >= 2) and add any subset of "twin" edges, where
    two vertices of the same part are twins when they have identical
    neighbourhoods in the other part.  These are the possible cores of
    graphs meeting the Laplacian bound mu = n - gamma + 2 with equality.
  * S-plus graphs: obtained the same way from a semiregular bipartite
    graph (every U vertex of cross degree r >= 1, every W vertex of
    cross degree s >= 1), except twin status is judged inside the grown
    graph itself.  These are exactly the equality cases of the
    neighbourhood-union bound on mu.
  * The signless Laplacian extremal family: a clique K_{n-gamma+1} plus
    gamma - 1 isolated vertices, or (gamma >= 2, n - gamma even) a
    cocktail-party graph on n - gamma + 2 vertices plus gamma - 2
    isolated vertices.

Searches here are exponential in honest ways (subsets of one part,
subsets of twin pairs) and carry explicit caps with clear errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .canonical import CANONICAL_MAX_VERTICES, is_isomorphic
from .graphs import (
    Graph,
    add_isolated,
    bits,
    cocktail_party,
    complete,
    complete_bipartite,
    induced_subgraph,
    isolated_mask,
    popcount,
)

PART_SEARCH_MAX_VERTICES = 20
TWIN_SUBSET_CAP = 20


class Bipartition(NamedTuple):
    """Two disjoint vertex masks covering the graph, no edges inside either."""

    u: int
    w: int


def is_valid_bipartition(g: Graph, bp: Bipartition) -> bool:
    full = g.full_mask()
    u, w = bp
    if u & w or (u | w) != full or (u | w) & ~full:
        return False
    for v in bits(u):
        if g.adj[v] & u:
            return False
    for v in bits(w):
        if g.adj[v] & w:
            return False
    return True


def bipartition_of(g: Graph) -> Optional[Bipartition]:
    """Some valid bipartition, or None when g has an odd cycle.

    Two-colours each component by breadth-first layers; the component
    root (its lowest vertex) goes to the U side, so isolated vertices
    land in U.
    """
    color = [-1] * g.n
    u = 0
    w = 0
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        u |= 1 << root
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                cx = color[x]
                for y in bits(g.adj[x]):
                    if color[y] == -1:
                        color[y] = 1 - cx
                        if color[y] == 0:
                            u |= 1 << y
                        else:
                            w |= 1 << y
                        nxt.append(y)
                    elif color[y] == cx:
                        return None
            frontier = nxt
    return Bipartition(u, w)


def is_semiregular_bipartite(g: Graph, bp: Bipartition) -> bool:
    """All of U shares one degree r >= 1 and all of W one degree s >= 1.

    bp must be a valid bipartition of g (ValueError otherwise); with it,
    every degree is a cross degree.
    """
    if not is_valid_bipartition(g, bp):
        raise ValueError("not a valid bipartition of the graph")
    u, w = bp
    if u == 0 or w == 0:
        return False
    r = -1
    for v in bits(u):
        d = g.degree(v)
        if d == 0 or (r != -1 and d != r):
            return False
        r = d
    s = -1
    for v in bits(w):
        d = g.degree(v)
        if d == 0 or (s != -1 and d != s):
            return False
        s = d
    return True


@dataclass(frozen=True)
class TwinEdgeSets:
    """Same-part vertex pairs with identical cross neighbourhoods."""

    e_u: tuple[tuple[int, int], ...]
    e_w: tuple[tuple[int, int], ...]


def twin_edge_sets(b: Graph, bp: Bipartition) -> TwinEdgeSets:
    if not is_valid_bipartition(b, bp):
        raise ValueError("not a valid bipartition of the graph")
    u, w = bp

    def pairs(side: int, other: int) -> tuple[tuple[int, int], ...]:
        verts = list(bits(side))
        out = []
        for i, x in enumerate(verts):
            for y in verts[i + 1:]:
                if (b.adj[x] & other) == (b.adj[y] & other):
                    out.append((x, y))
        return tuple(out)

    return TwinEdgeSets(e_u=pairs(u, w), e_w=pairs(w, u))


def b_plus_members(b: Graph, bp: Bipartition) -> Iterator[Graph]:
    """Every graph obtained from b by adding a subset of twin edges.

    Yields 2^(|e_u| + |e_w|) labelled graphs, the empty subset (b
    itself) first.  Caps the exponent at 20; beyond that, ValueError.
    """
    twins = twin_edge_sets(b, bp)
    all_pairs = twins.e_u + twins.e_w
    k = len(all_pairs)
    if k > TWIN_SUBSET_CAP:
        raise ValueError(
            f"{k} twin pairs exceed the enumeration cap of {TWIN_SUBSET_CAP}"
        )
    for subset in range(1 << k):
        adj = list(b.adj)
        for i in range(k):
            if (subset >> i) & 1:
                x, y = all_pairs[i]
                adj[x] |= 1 << y
                adj[y] |= 1 << x
        yield Graph(b.n, adj)


# -- S-plus membership ---------------------------------------------------


def s_plus_bipartition(g: Graph) -> Optional[Bipartition]:
    """A bipartition witnessing S-plus membership, or None.

    g is in S-plus iff its vertices split into parts U, W such that the
    cross edges form a semiregular bipartite graph and every same-part
    edge of g joins two vertices with identical cross neighbourhoods.
    Searches all 2^(n-1) splits; capped at 20 vertices.
    """
    n = g.n
    if n > PART_SEARCH_MAX_VERTICES:
        raise ValueError(
            f"part search is exponential, capped at {PART_SEARCH_MAX_VERTICES} "
            f"vertices (got {n})"
        )
    full = g.full_mask()
    # vertex 0 always sits in U, halving the search
    for half in range(1 << (n - 1)):
        u = (half << 1) | 1
        w = full & ~u
        if w == 0:
            continue
        ok = True
        r = -1
        for v in bits(u):
            d = popcount(g.adj[v] & w)
            if d == 0 or (r != -1 and d != r):
                ok = False
                break
            r = d
        if not ok:
            continue
        s = -1
        for v in bits(w):
            d = popcount(g.adj[v] & u)
            if d == 0 or (s != -1 and d != s):
                ok = False
                break
            s = d
        if not ok:
            continue
        for side, other in ((u, w), (w, u)):
            for x in bits(side):
                inner = g.adj[x] & side
                for y in bits(inner):
                    if y <= x:
                        continue
                    if (g.adj[x] & other) != (g.adj[y] & other):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return Bipartition(u, w)
    return None


def is_in_s_plus(g: Graph) -> bool:
    return s_plus_bipartition(g) is not None


# -- extremal family recognizers ------------------------------------------


@dataclass(frozen=True)
class ExtremalWitness:
    """How a graph realises an extremal family.

    kind: one of L_theorem, Q_clique, Q_cocktail, bipartite_L.
    isolated_count: isolated vertices outside the core.
    core_vertices: mask of the non-isolated core, in g's own labels.
    bipartition: for the Laplacian families, the complete bipartite
    split of the core (g's labels); None for the signless families.
    """

    kind: str
    isolated_count: int
    core_vertices: int
    bipartition: Optional[Bipartition]


def _core(g: Graph, gamma: int, expected_isolated: int) -> Optional[tuple[int, Graph]]:
    iso = isolated_mask(g)
    if popcount(iso) != expected_isolated:
        return None
    core_mask = g.full_mask() & ~iso
    if core_mask == 0:
        return None
    return core_mask, induced_subgraph(g, core_mask)


def is_extremal_L(g: Graph, gamma: int) -> Optional[ExtremalWitness]:
    """Membership in the Laplacian equality family for this gamma.

    Requires 2 <= gamma <= n - 1.  Accepts exactly: gamma - 2 isolated
    vertices, max degree at most n - gamma, and a core whose vertices
    split into parts of size >= 2 with every cross pair adjacent (the
    core is then a complete bipartite graph with some twin edges added,
    which is the B-plus condition).  Returns a witness or None.
    """
    n = g.n
    if not 2 <= gamma <= n - 1:
        raise ValueError(f"gamma must be in 2..n-1, got gamma={gamma}, n={n}")
    if g.max_degree() > n - gamma:
        return None
    found = _core(g, gamma, gamma - 2)
    if found is None:
        return None
    core_mask, h = found
    if h.n > PART_SEARCH_MAX_VERTICES:
        raise ValueError(
            f"core has {h.n} vertices; part search capped at "
            f"{PART_SEARCH_MAX_VERTICES}"
        )
    core_verts = list(bits(core_mask))
    hfull = h.full_mask()
    for half in range(1 << (h.n - 1)):
        u = (half << 1) | 1
        w = hfull & ~u
        if popcount(u) < 2 or popcount(w) < 2:
            continue
        if all((h.adj[x] & w) == w for x in bits(u)):
            orig_u = 0
            for x in bits(u):
                orig_u |= 1 << core_verts[x]
            orig_w = core_mask & ~orig_u
            return ExtremalWitness(
                kind="L_theorem",
                isolated_count=gamma - 2,
                core_vertices=core_mask,
                bipartition=Bipartition(orig_u, orig_w),
            )
    return None


def is_extremal_bipartite_L(g: Graph, gamma: int) -> bool:
    """Bipartite refinement: the core must be complete bipartite, no twins.

    g itself must be bipartite (ValueError otherwise) and gamma in
    2..n-1.  Accepts exactly gamma - 2 isolated vertices plus a core
    K_{a, n-gamma+2-a} with a >= 2.
    """
    n = g.n
    if not 2 <= gamma <= n - 1:
        raise ValueError(f"gamma must be in 2..n-1, got gamma={gamma}, n={n}")
    if bipartition_of(g) is None:
        raise ValueError("graph is not bipartite")
    found = _core(g, gamma, gamma - 2)
    if found is None:
        return False
    _, h = found
    hbp = bipartition_of(h)
    assert hbp is not None  # subgraph of a bipartite graph
    u, w = hbp
    a, b = popcount(u), popcount(w)
    if a < 2 or b < 2:
        return False
    return all((h.adj[x] & w) == w for x in bits(u))


def is_extremal_Q(g: Graph, gamma: int) -> Optional[ExtremalWitness]:
    """Membership in the signless Laplacian equality family.

    Requires 1 <= gamma <= n - 1.  The family: K_{n-gamma+1} plus
    gamma - 1 isolated vertices, or (gamma >= 2 and n - gamma even) the
    cocktail-party graph on n - gamma + 2 vertices plus gamma - 2
    isolated vertices.  Matching is by canonical form up to 10 vertices;
    beyond, by degree multiset, which determines both families exactly
    (isolated vertices carry no edges, so the non-isolated core is an
    (n-gamma)-regular graph on n-gamma+1 resp. n-gamma+2 vertices,
    forcing the clique resp. the cocktail-party graph).
    """
    n = g.n
    if not 1 <= gamma <= n - 1:
        raise ValueError(f"gamma must be in 1..n-1, got gamma={gamma}, n={n}")

    def matches(target: Graph) -> bool:
        if n <= CANONICAL_MAX_VERTICES:
            return is_isomorphic(g, target)
        return sorted(g.degrees()) == sorted(target.degrees())

    clique = add_isolated(complete(n - gamma + 1), gamma - 1)
    if matches(clique):
        core = g.full_mask() & ~isolated_mask(g)
        return ExtremalWitness(
            kind="Q_clique",
            isolated_count=gamma - 1,
            core_vertices=core,
            bipartition=None,
        )
    if gamma >= 2 and (n - gamma) % 2 == 0:
        party = add_isolated(cocktail_party((n - gamma + 2) // 2), gamma - 2)
        if matches(party):
            core = g.full_mask() & ~isolated_mask(g)
            return ExtremalWitness(
                kind="Q_cocktail",
                isolated_count=gamma - 2,
                core_vertices=core,
                bipartition=None,
            )
    return None


# -- extremal family constructors ------------------------------------------


def construct_extremal_L(n: int, gamma: int) -> list[Graph]:
    """All Laplacian-extremal graphs for (n, gamma), with repetition.

    Cores are B-plus members over every complete bipartite graph on
    n - gamma + 2 vertices with both parts >= 2, filtered by the degree
    cap Delta <= n - gamma, plus gamma - 2 isolated vertices.  Labelled
    duplicates across different twin subsets are possible; callers
    deduplicate up to isomorphism.
    """
    if not 2 <= gamma <= n - 1:
        raise ValueError(f"gamma must be in 2..n-1, got gamma={gamma}, n={n}")
    m = n - gamma + 2
    out = []
    cap = n - gamma
    for a in range(2, m // 2 + 1):
        base = complete_bipartite(a, m - a)
        bp = Bipartition((1 << a) - 1, ((1 << m) - 1) ^ ((1 << a) - 1))
        for core in b_plus_members(base, bp):
            if core.max_degree() > cap:
                continue
            out.append(add_isolated(core, gamma - 2))
    return out


def construct_extremal_Q(n: int, gamma: int) -> list[Graph]:
    """The (at most two) signless-Laplacian-extremal graphs for (n, gamma)."""
    if not 1 <= gamma <= n - 1:
        raise ValueError(f"gamma must be in 1..n-1, got gamma={gamma}, n={n}")
    out = [add_isolated(complete(n - gamma + 1), gamma - 1)]
    if gamma >= 2 and (n - gamma) % 2 == 0:
        out.append(add_isolated(cocktail_party((n - gamma + 2) // 2), gamma - 2))
    return out
