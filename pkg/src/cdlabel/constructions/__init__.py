"""Extremal graph families, their canonical labelings and certifiers."""
from .bipartite import bipartite_two_value_labeling
from .bipartite_hard import (
    BipartiteHard,
    BipartiteRefutation,
    bipartite_hard_vertex_count,
    check_bipartite_hard,
    gen_bipartite_hard,
    random_small_labeling,
    refute_bipartite_hard,
)
from .list_gap import (
    ListGapCertificate,
    ListGapGraph,
    ListRefutation,
    adversarial_lists,
    certify_list_gap,
    certify_list_obstruction,
    gen_list_gap,
    list_gap_vertex_count,
    random_list_labeling,
    shifted_canonical,
)
from .split import random_split_graph, split_greedy_labeling, split_strong_labeling
from ..roles import dump_roles, load_roles
from .strong_gap import StrongGapGraph, check_strong_gap, counting_lower_bound, gen_strong_gap

# short names used by the command line
gen_t1 = gen_list_gap
certify_t1_list_obstruction = certify_list_obstruction
gen_tj1 = gen_bipartite_hard
refute_tj1 = refute_bipartite_hard
gen_t6 = gen_strong_gap
t6_counting_lower_bound = counting_lower_bound


__all__ = [
    "bipartite_two_value_labeling", "BipartiteHard", "BipartiteRefutation",
    "bipartite_hard_vertex_count", "check_bipartite_hard", "gen_bipartite_hard",
    "random_small_labeling", "refute_bipartite_hard", "ListGapCertificate", "ListGapGraph",
    "ListRefutation", "adversarial_lists", "certify_list_gap", "certify_list_obstruction",
    "gen_list_gap", "list_gap_vertex_count", "random_list_labeling", "shifted_canonical",
    "random_split_graph", "split_greedy_labeling", "split_strong_labeling", "dump_roles",
    "load_roles", "StrongGapGraph", "check_strong_gap", "counting_lower_bound", "gen_strong_gap",
    "gen_t1", "certify_t1_list_obstruction", "gen_tj1", "refute_tj1", "gen_t6",
    "t6_counting_lower_bound",
]
