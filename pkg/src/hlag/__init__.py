"""Graph-Lagrangians of uniform hypergraphs.

Evaluation and simplex maximization of the edge-monomial polynomial,
colex-order combinatorics and left-compression, near-extremal family
constructions, and desk-scale exhaustive/numeric verification with margin
reports.
"""

from .edgelist import EdgeListError, parse_edge_list, serialize_edge_list
from .families import (
    FamilyParams,
    addresult_graph,
    addresultplus_case,
    case2_printed_graph,
    family_edge_count,
    lemmaaddplus_graph,
)
from .hypergraph import (
    MAX_UNIVERSE,
    Ordering,
    RSet,
    UniformHypergraph,
    colex_compare,
    colex_rank,
    colex_segment,
    colex_unrank,
    complement_in_clique,
    complete_graph,
    elementary_compress,
    is_left_compressed,
    left_compress_fixpoint,
    with_universe,
)
from .lagrangian import (
    OptResult,
    OptimizerConfig,
    Rational,
    Weighting,
    ZeroLambdaError,
    baum_eagon_step,
    clique_lambda_exact,
    eval_lambda,
    eval_lambda_exact,
    kkt_residual,
    minimize_support,
    optimize,
    pair_link,
    strict_link,
    vertex_link,
)
from .search import (
    Check,
    EnumerationBudgetError,
    EnumerationCursor,
    VerificationReport,
    enumerate_left_compressed,
    minimal_universe,
    partition_cursors,
    random_left_compressed_graph,
    verify_conjecture,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeListError",
    "parse_edge_list",
    "serialize_edge_list",
    "FamilyParams",
    "addresult_graph",
    "addresultplus_case",
    "case2_printed_graph",
    "family_edge_count",
    "lemmaaddplus_graph",
    "MAX_UNIVERSE",
    "Ordering",
    "RSet",
    "UniformHypergraph",
    "colex_compare",
    "colex_rank",
    "colex_segment",
    "colex_unrank",
    "complement_in_clique",
    "complete_graph",
    "elementary_compress",
    "is_left_compressed",
    "left_compress_fixpoint",
    "with_universe",
    "OptResult",
    "OptimizerConfig",
    "Rational",
    "Weighting",
    "ZeroLambdaError",
    "baum_eagon_step",
    "clique_lambda_exact",
    "eval_lambda",
    "eval_lambda_exact",
    "kkt_residual",
    "minimize_support",
    "optimize",
    "pair_link",
    "strict_link",
    "vertex_link",
    "Check",
    "EnumerationBudgetError",
    "EnumerationCursor",
    "VerificationReport",
    "enumerate_left_compressed",
    "minimal_universe",
    "partition_cursors",
    "random_left_compressed_graph",
    "verify_conjecture",
    "verify_theorem",
]
