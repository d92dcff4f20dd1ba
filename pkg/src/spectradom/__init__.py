"""Domination numbers, (signless) Laplacian spectral radii, and
exhaustive verification of the extremal bounds relating them.

The package computes gamma(G) exactly, mu(G) and q(G) via an in-package
eigensolver, recognizes and constructs the extremal families of the
bounds mu <= n - gamma + 2 and q <= 2(n - gamma), and machine-checks
every bound and equality characterization over all non-isomorphic
graphs with up to 7 vertices.
"""

from .backend import BACKEND_NAME
from .canonical import (
    CANONICAL_MAX_VERTICES,
    canonical_form,
    canonical_graph,
    canonical_mask,
    graph_from_triangle_mask,
    is_isomorphic,
    triangle_mask,
)
from .domination import DominationResult, domination_number, is_dominating
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import (
    MAX_VERTICES,
    Graph,
    add_isolated,
    bits,
    cocktail_party,
    complement,
    complete,
    complete_bipartite,
    components,
    construct,
    cycle,
    disjoint_union,
    du_set,
    duv_set,
    empty,
    format_vertex_set,
    from_edges,
    induced_subgraph,
    is_connected,
    isolated_mask,
    mask_from,
    neighborhood_union,
    path,
    popcount,
    star,
    with_edge,
)
from .harness import (
    CensusReport,
    SuiteReport,
    TheoremCounts,
    emit_report,
    enumerate_nonisomorphic,
    extremal_census,
    ingest_graph6,
    ingest_lines,
    run_suite,
)
from .spectral import (
    JacobiConvergenceError,
    SpectralSummary,
    eigen_max,
    eigen_spectrum,
    laplacian,
    mu,
    neighborhood_union_bound,
    q,
    signless_laplacian,
    summary,
)
from .structure import (
    Bipartition,
    ExtremalWitness,
    TwinEdgeSets,
    b_plus_members,
    bipartition_of,
    construct_extremal_L,
    construct_extremal_Q,
    is_extremal_L,
    is_extremal_Q,
    is_extremal_bipartite_L,
    is_in_s_plus,
    is_semiregular_bipartite,
    is_valid_bipartition,
    s_plus_bipartition,
    twin_edge_sets,
)
from .theorems import (
    EqualityAuditError,
    THEOREM_ORDER,
    TheoremVerdict,
    applicable_checks,
    check_brand_seifter,
    check_corollary_bipartite,
    check_lemma,
    check_ore,
    check_q_2n2,
    check_q_bipartite,
    check_remark_gamma1,
    check_theorem_L,
    check_theorem_Q,
    run_checks,
)

__version__ = "0.1.0"
