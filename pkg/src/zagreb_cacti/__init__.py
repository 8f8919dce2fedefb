"""Multiplicative Zagreb indices on cactus graphs: bounds, extremal graphs,
improving rewrites and exhaustive verification at small orders."""

__version__ = "0.1.0"

from .graph_core import CactusGraph, Graph, NotACactusError, block_decomposition, is_cactus, pendant_count
from .formats import ParseError, from_edge_list, from_graph6, to_edge_list, to_graph6
from .canonical import canonical_form, canonical_graph
from .indices import (
    IndexValue, first_zagreb, second_zagreb, narumi_katayama,
    multiplicative_zagreb_1, multiplicative_zagreb_2, fact1_ratio, fact2_ratio, index_value,
)
from .bounds import BoundSpec, Theorem, bound_for, theorem3_condition_check
from .constructions import construct_extremal, realize_tree_degree_sequence
from .enumeration import enumerate_cacti, extremal_census, verify_theorem
from .rewrite import RewriteMove, SearchConfig, apply_move, find_moves, local_search, pro_algorithm

__all__ = [
    "CactusGraph", "Graph", "NotACactusError", "block_decomposition", "is_cactus", "pendant_count",
    "ParseError", "from_edge_list", "from_graph6", "to_edge_list", "to_graph6",
    "canonical_form", "canonical_graph",
    "IndexValue", "first_zagreb", "second_zagreb", "narumi_katayama",
    "multiplicative_zagreb_1", "multiplicative_zagreb_2", "fact1_ratio", "fact2_ratio", "index_value",
    "BoundSpec", "Theorem", "bound_for", "theorem3_condition_check",
    "construct_extremal", "realize_tree_degree_sequence",
    "enumerate_cacti", "extremal_census", "verify_theorem",
    "RewriteMove", "SearchConfig", "apply_move", "find_moves", "local_search", "pro_algorithm",
]
