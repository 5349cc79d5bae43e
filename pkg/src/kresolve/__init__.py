"""Exact and certified computation of metric dimension, fault-tolerant
metric dimension, and k-metric dimension of graphs."""

__version__ = "0.1.0"

from .graph import (DisconnectedError, DistanceMatrix, Graph, GraphError,
                    ParseError, all_pairs_distances, parse_graph)
from .metric import (PairDistinguishers, distinguisher_table, is_k_resolving,
                     is_k_resolving_definitional, kappa)
from .solver import (Budget, BoundCertificate, SolveResult, brute_force_min,
                     lower_bound_pair_slack, preprocess, solve_exact,
                     solve_greedy)
from .families import (LabeledGraph, gen_complete_multipartite, gen_mt,
                       gen_mtk, gen_path, gen_spine_tree, parity_ft_set)
from .formulas import (BoundsResult, TreeParams, multipartite_invariants,
                       path_dim_k, theoretical_bounds, tree_invariants)
from .bounds import (check_ball_growth, check_near_distinguisher,
                     expand_radius2)

__all__ = [
    "Graph", "DistanceMatrix", "GraphError", "ParseError", "DisconnectedError",
    "parse_graph", "all_pairs_distances",
    "PairDistinguishers", "distinguisher_table", "kappa",
    "is_k_resolving", "is_k_resolving_definitional",
    "SolveResult", "BoundCertificate", "Budget", "preprocess", "solve_greedy",
    "solve_exact", "lower_bound_pair_slack", "brute_force_min",
    "LabeledGraph", "gen_mt", "gen_mtk", "gen_complete_multipartite",
    "gen_path", "gen_spine_tree", "parity_ft_set",
    "TreeParams", "BoundsResult", "tree_invariants",
    "multipartite_invariants", "path_dim_k", "theoretical_bounds",
    "expand_radius2", "check_ball_growth", "check_near_distinguisher",
]
