"""sqtree: edge ideals of squares of trees.

Exact graph operations, chordality and Fröberg's criterion, linear quotients
of quadratic monomial ideals, combinatorial invariants (dimension, induced
matching number, big height, Kimura's d'), a Hochster-formula Betti oracle,
tree-family classification, and small-tree exploration.
"""

from .errors import (
    CapExceededError,
    GraphFormatError,
    NotATreeError,
    NotChordalError,
    SqtreeError,
    ZeroIdealError,
)
from .graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    distances,
    induced_subgraph,
    is_tree,
    maximal_cliques,
    path_graph,
    square,
    star_graph,
)
from .chordal import find_gap, has_linear_resolution, is_chordal, is_cochordal
from .monomial import (
    betti_from_lq,
    edge_ideal,
    revlex_order,
    search_linear_quotients,
    verify_linear_quotients,
)
from .invariants import (
    bight,
    chordal_report,
    d_prime,
    induced_matching_number,
    max_independent_set,
)
from .betti import hochster_betti, hochster_report
from .trees import (
    classify_tree,
    double_broom,
    double_broom_formulas,
    harary_ross_check,
    linear_resolution_by_classification,
    path_formulas,
    whiskered_star,
)
from .explore import enumerate_trees, scan_conjectures

__version__ = "0.1.0"

__all__ = [
    "find_gap",
    "has_linear_resolution",
    "is_chordal",
    "is_cochordal",
    "hochster_betti",
    "hochster_report",
    "enumerate_trees",
    "scan_conjectures",
    "CapExceededError",
    "GraphFormatError",
    "NotATreeError",
    "NotChordalError",
    "SqtreeError",
    "ZeroIdealError",
    "Graph",
    "complement",
    "complete_graph",
    "cycle_graph",
    "distances",
    "induced_subgraph",
    "is_tree",
    "maximal_cliques",
    "path_graph",
    "square",
    "star_graph",
    "betti_from_lq",
    "edge_ideal",
    "revlex_order",
    "search_linear_quotients",
    "verify_linear_quotients",
    "bight",
    "chordal_report",
    "d_prime",
    "induced_matching_number",
    "max_independent_set",
    "classify_tree",
    "double_broom",
    "double_broom_formulas",
    "harary_ross_check",
    "linear_resolution_by_classification",
    "path_formulas",
    "whiskered_star",
]
