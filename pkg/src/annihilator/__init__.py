"""Graph invariants around independence and annihilation numbers.

The package computes the independence number, annihilation number,
critical independence number and matching number of small simple graphs,
generates the counterexample families that separate them, and mechanically
verifies the related characterization claims by exhaustive search.
"""

from .families import (
    FamilyInstance,
    build_family,
    c3_plus_singletons,
    c5_two_chords_plus_singleton,
    chorded_cycle_star,
    chorded_cycle_star_witness,
    odd_cycle_plus_odd_path,
)
from .graph_core import (
    Graph,
    GraphFormatError,
    bipartite_double_cover,
    connected_components,
    degree_sequence,
    encode_edge_list,
    encode_graph6,
    find_claw,
    is_bipartite,
    is_connected,
    is_independent_set,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    remove_vertices,
)
from .invariants import (
    AnnihilatingStatus,
    InvariantReport,
    SolverLimitError,
    annihilating_set_status,
    annihilation_number,
    critical_difference,
    critical_independence_number,
    critical_independence_number_oracle,
    full_report,
    independence_number_exact,
    is_annihilating_set,
    is_koenig_egervary,
    maximum_matching,
    solver_limit,
)
from .theorem_lab import (
    EnumerationSource,
    FamilySource,
    Graph6Source,
    GraphFacts,
    RandomSource,
    SearchReport,
    Status,
    TheoremId,
    TheoremVerdict,
    check_bipartite_theorem,
    check_clawfree_theorem,
    check_conjecture34,
    check_corollary3,
    check_if_direction,
    check_only_if,
    check_removable_vertex_lemma,
    enumerate_labeled_graphs,
    run_search,
    sample_random_graph,
)

__version__ = "0.1.0"
