"""Total-variation regularisation on directed graphs in analysis and synthesis form."""

from __future__ import annotations

from .dictionary import (
    Dictionary,
    build_dictionary,
    closed_form_branched,
    closed_form_cycle,
    closed_form_path,
    cut_dictionary,
    dictionaries_equivalent,
    prune_convex_hull,
    synthesize_dictionary,
    tree_dictionary,
)
from .estimators import AnalysisTV, SynthesisTV
from .exceptions import TVSynError
from .factors import (
    FactorReport,
    inverse_scaling_factor,
    strong_compat,
    strong_compat_constant,
    table1_report,
    weak_compat_bounds,
)
from .graph import (
    DirectedGraph,
    Partition,
    branched_path,
    count_spanning_trees_kirchhoff,
    cycle_graph,
    derivative_operator,
    enumerate_spanning_trees,
    enumerate_two_partitions,
    from_edge_list,
    grid_graph,
    incidence_matrix,
    line_graph,
    path_graph,
    star_graph,
)
from .linalg import invert, projection_pair, pseudoinverse_bordered, pseudoinverse_svd, rank
from .solvers import (
    EquivalenceReport,
    FitResult,
    check_corollary41,
    check_lemma21,
    check_lemma31,
    check_lemma32,
    fit_analysis,
    fit_lasso,
    fit_synthesis,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisTV",
    "Dictionary",
    "DirectedGraph",
    "EquivalenceReport",
    "FactorReport",
    "FitResult",
    "Partition",
    "SynthesisTV",
    "TVSynError",
    "branched_path",
    "build_dictionary",
    "check_corollary41",
    "check_lemma21",
    "check_lemma31",
    "check_lemma32",
    "closed_form_branched",
    "closed_form_cycle",
    "closed_form_path",
    "count_spanning_trees_kirchhoff",
    "cut_dictionary",
    "cycle_graph",
    "derivative_operator",
    "dictionaries_equivalent",
    "enumerate_spanning_trees",
    "enumerate_two_partitions",
    "fit_analysis",
    "fit_lasso",
    "fit_synthesis",
    "from_edge_list",
    "grid_graph",
    "incidence_matrix",
    "inverse_scaling_factor",
    "invert",
    "line_graph",
    "path_graph",
    "projection_pair",
    "prune_convex_hull",
    "pseudoinverse_bordered",
    "pseudoinverse_svd",
    "rank",
    "star_graph",
    "strong_compat",
    "strong_compat_constant",
    "synthesize_dictionary",
    "table1_report",
    "tree_dictionary",
    "weak_compat_bounds",
]
