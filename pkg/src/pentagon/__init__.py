"""Triangles in pentagon-free graphs and girth-6 Berge hypergraphs.

Exact counting censuses, block decompositions, extremal constructions,
closed-form bound coefficients, small-order exhaustive search and a
claim verifier, with a CLI wrapping all of it.
"""

from .errors import BudgetError, ParseError, PentagonError, StructureError
from .graph import (
    DegreeStats,
    Graph,
    Neighborhoods,
    degree_stats,
    graph_from_edge_list,
    neighborhoods,
)
from .census import (
    FivePathCensus,
    ForbiddenSubgraphReport,
    MiddleEdgeCensus,
    TriangleCensus,
    TwoPathReport,
    count_walks,
    five_path_census,
    five_path_census_dfs,
    forbidden_subgraphs,
    middle_edge_census,
    require_c5_free,
    triangle_census,
    two_path_report,
)
from .blocks import (
    Block,
    EdgeDecomposition,
    ReductionLog,
    TriangleSplit,
    edge_decomposition,
    extract_c4_free_subgraph,
    split_triangle_edges,
    triangle_blocks,
    triangle_core_reduction,
)
from .hypergraph import (
    BergeCycleWitness,
    BergeGirthResult,
    Hypergraph,
    ShadowCensus,
    ThreePathBoundReport,
    berge_girth,
    cycle_containment_check,
    hyperedge_3path_bound_report,
    hypergraph_from_text,
    is_linear,
    k4_hypergraph,
    require_girth_at_least,
    shadow,
    three_path_census,
)
from .constructions import (
    bollobas_gyori,
    gadget,
    greedy_girth6_hypergraph,
    projective_plane_incidence,
    random_c5_free,
)
from .bounds import (
    AlphaOptimum,
    BoundEntry,
    alpha_objective,
    coefficient_table,
    hypergraph_edge_bounds,
    indc4c5_edge_bound,
    optimize_alpha,
    three_path_slack_constant,
    triangle_bound,
)
from .search import (
    ExactResult,
    LocalSearchResult,
    canonical_form,
    exact_max_edges_indc4c5,
    exact_max_hyperedges_girth6,
    exact_max_triangles_c5free,
    local_search_triangles,
    max_triangles_c5free_labelled,
)
from .claims import ClaimReport, ClaimResult, verify_claims

__version__ = "0.1.0"

__all__ = [
    "AlphaOptimum",
    "BergeCycleWitness",
    "BergeGirthResult",
    "Block",
    "BoundEntry",
    "BudgetError",
    "ClaimReport",
    "ClaimResult",
    "DegreeStats",
    "EdgeDecomposition",
    "ExactResult",
    "FivePathCensus",
    "ForbiddenSubgraphReport",
    "Graph",
    "Hypergraph",
    "LocalSearchResult",
    "MiddleEdgeCensus",
    "Neighborhoods",
    "ParseError",
    "PentagonError",
    "ReductionLog",
    "ShadowCensus",
    "StructureError",
    "ThreePathBoundReport",
    "TriangleCensus",
    "TriangleSplit",
    "TwoPathReport",
    "alpha_objective",
    "berge_girth",
    "bollobas_gyori",
    "canonical_form",
    "coefficient_table",
    "count_walks",
    "cycle_containment_check",
    "degree_stats",
    "edge_decomposition",
    "exact_max_edges_indc4c5",
    "exact_max_hyperedges_girth6",
    "exact_max_triangles_c5free",
    "extract_c4_free_subgraph",
    "five_path_census",
    "five_path_census_dfs",
    "forbidden_subgraphs",
    "gadget",
    "graph_from_edge_list",
    "greedy_girth6_hypergraph",
    "hyperedge_3path_bound_report",
    "hypergraph_edge_bounds",
    "hypergraph_from_text",
    "indc4c5_edge_bound",
    "is_linear",
    "k4_hypergraph",
    "local_search_triangles",
    "max_triangles_c5free_labelled",
    "middle_edge_census",
    "neighborhoods",
    "optimize_alpha",
    "projective_plane_incidence",
    "random_c5_free",
    "require_c5_free",
    "require_girth_at_least",
    "shadow",
    "split_triangle_edges",
    "three_path_census",
    "three_path_slack_constant",
    "triangle_blocks",
    "triangle_bound",
    "triangle_census",
    "triangle_core_reduction",
    "two_path_report",
    "verify_claims",
]
