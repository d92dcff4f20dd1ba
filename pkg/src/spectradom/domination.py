"""Exact domination numbers.

A set S dominates G when every vertex is in S or adjacent to a member
of S.  gamma(G) is the minimum size of a dominating set ("minimum", the
cardinality optimum, which is what matters here; an inclusion-minimal
set can be larger).  The search is exact branch and bound over closed
neighbourhoods, practical well beyond the 7-vertex census range but
still exponential: intended scale is a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend
from .graphs import Graph, bits


@dataclass(frozen=True)
class DominationResult:
    """gamma plus one optimal witness set (bitmask).

    The witness is deterministic: branch and bound prunes anything that
    cannot strictly improve the incumbent, so under the fixed branching
    order exactly one optimum is ever encountered.
    """

    gamma: int
    witness: int

    def witness_vertices(self) -> list[int]:
        return list(bits(self.witness))


def is_dominating(g: Graph, vertex_set: int) -> bool:
    """Does the masked set dominate g?  Rejects stray bits."""
    if vertex_set & ~g.full_mask():
        raise ValueError("vertex set has bits outside the graph")
    covered = vertex_set
    for v in bits(vertex_set):
        covered |= g.adj[v]
    return covered == g.full_mask()


def domination_number(g: Graph) -> DominationResult:
    gamma, witness = backend.solve_domination(g.n, g.adj)
    return DominationResult(gamma, witness)
