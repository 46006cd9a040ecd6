"""Exact chromatic-bound verification at desk scale.

Immutable bitmask graphs, exact degree parameters and solvers, named
law checks with re-checkable witnesses, extremal constructions, the
partitioned-coloring machinery (minimum colorings, swaps, path
shifts, structure checks), and the counter-driven singleton walk that
extracts clique certificates.
"""

from .campaign import (
    CampaignReport,
    EnumerateSource,
    FileSource,
    GnpSource,
    run_campaign,
)
from .constructions import (
    FGraph,
    complete_graph,
    cycle,
    enumerate_small_graphs,
    f_graph,
    from_graph6,
    gnp_random,
    graph_from_edge_code,
    n_epsilon,
    read_graph6_file,
    star,
    to_graph6,
)
from .degrees import (
    DegreeReport,
    classify_low_high,
    degree_report,
    delta2,
    delta_eps,
    exact_fraction,
    max_degree,
    min_degree,
    ore_degree,
    script_h,
    threshold_subgraph,
)
from .dimacs import DimacsError, parse_dimacs, write_dimacs
from .errors import InputError, InternalCheckError, PreconditionError
from .graph import Graph
from .laws import LAW_NAMES, GraphFacts, check_law, check_laws
from .partitioned import (
    PartitionSpec,
    PartitionedColoring,
    check_component_structure,
    check_joined_lows,
    enumerate_partitioned_colorings,
    global_min_coloring,
    kempe_path_shift,
    minimum_partitioned_coloring,
    objective,
    steepest_descent,
    swap,
    z_component,
)
from .solvers import (
    chromatic_number,
    clique_number,
    critical_vertices,
    greedy_coloring,
    is_vertex_critical,
    k_colorable,
    list_color_feasible,
)
from .verdict import LawVerdict, graph_key
from .walk import (
    HYPOTHESIS_NAMES,
    CliqueCertificate,
    HypothesisViolation,
    IterationCapExceeded,
    WalkHypothesisError,
    WalkState,
    check_hypotheses,
    choose_partition_spec,
    normalize_singleton_to_low,
    run_walk,
    walk_step,
)

__version__ = "0.1.0"

__all__ = [
    "CampaignReport",
    "CliqueCertificate",
    "DegreeReport",
    "DimacsError",
    "EnumerateSource",
    "FGraph",
    "FileSource",
    "GnpSource",
    "Graph",
    "GraphFacts",
    "HYPOTHESIS_NAMES",
    "HypothesisViolation",
    "InputError",
    "InternalCheckError",
    "IterationCapExceeded",
    "LAW_NAMES",
    "LawVerdict",
    "PartitionSpec",
    "PartitionedColoring",
    "PreconditionError",
    "WalkHypothesisError",
    "WalkState",
    "check_component_structure",
    "check_hypotheses",
    "check_joined_lows",
    "check_law",
    "check_laws",
    "chromatic_number",
    "choose_partition_spec",
    "classify_low_high",
    "clique_number",
    "complete_graph",
    "critical_vertices",
    "cycle",
    "degree_report",
    "delta2",
    "delta_eps",
    "enumerate_partitioned_colorings",
    "enumerate_small_graphs",
    "exact_fraction",
    "f_graph",
    "from_graph6",
    "global_min_coloring",
    "gnp_random",
    "graph_from_edge_code",
    "graph_key",
    "greedy_coloring",
    "is_vertex_critical",
    "k_colorable",
    "kempe_path_shift",
    "list_color_feasible",
    "max_degree",
    "min_degree",
    "minimum_partitioned_coloring",
    "n_epsilon",
    "normalize_singleton_to_low",
    "objective",
    "ore_degree",
    "parse_dimacs",
    "read_graph6_file",
    "run_campaign",
    "run_walk",
    "script_h",
    "star",
    "steepest_descent",
    "swap",
    "threshold_subgraph",
    "to_graph6",
    "walk_step",
    "write_dimacs",
    "z_component",
]
