"""Exact separation of blossom inequalities for b-matching polytopes."""

from .core import INF, Graph, cut_weight, delta, ext_weight, interior_edges
from .cuttree import CutTree, gomory_hu, induced_cut
from .maxflow import MinCutResult, count_maxflows, min_st_cut
from .oddcut import Blossom, beta_min_F, blossom_value, minimize_blossom, minimum_t_cut, t_odd_tree_edges, t_prime
from .separation import (
    APEX,
    InfeasiblePoint,
    Instance,
    StarGraph,
    ViolatedBlossom,
    Violation,
    blossom_lhs_rhs,
    build_star_graph,
    check_degree_and_bounds,
    separate_capacitated,
    separate_tsp,
    separate_uncapacitated,
    separation_report,
    slack,
    tsp_instance,
)

__all__ = [
    "APEX", "INF", "Blossom", "CutTree", "Graph", "InfeasiblePoint", "Instance", "MinCutResult",
    "StarGraph", "ViolatedBlossom", "Violation", "beta_min_F", "blossom_lhs_rhs", "blossom_value",
    "build_star_graph", "check_degree_and_bounds", "count_maxflows", "cut_weight", "delta",
    "ext_weight", "gomory_hu", "induced_cut", "interior_edges", "min_st_cut", "minimize_blossom",
    "minimum_t_cut", "separate_capacitated", "separate_tsp", "separate_uncapacitated",
    "separation_report", "slack", "t_odd_tree_edges", "t_prime", "tsp_instance",
]
