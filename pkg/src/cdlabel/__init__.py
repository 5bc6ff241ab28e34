"""Closed distinguishing labelings: verifiers, exact solver, bounds, constructions, reductions."""
from .bounds import BoundReport, best_upper_bound
from .cnf import CnfFormula, dpll, dump_dimacs, parse_dimacs
from .conflict import ChromaticBound, ConflictGraph, chromatic_lower_bound, derive_forced
from .errors import Falsification
from .graph import (
    Graph,
    GraphFormatError,
    bipartition,
    dump_graph,
    load_graph,
    split_partition,
    srg_params,
)
from .labeling import (
    closed_sum,
    distinct_value_count,
    dump_labeling,
    load_labeling,
    strong_revaluation,
    verify_list,
    verify_multiset,
    verify_sum,
)
from .solver import (
    Budget,
    DecisionInstance,
    DisResult,
    SolveResult,
    compute_dis,
    compute_dis_s,
    decide,
    decide_list,
    export_cnf,
    solve_via_cnf,
)

__all__ = [
    "BoundReport", "best_upper_bound", "CnfFormula", "dpll", "dump_dimacs", "parse_dimacs",
    "ChromaticBound", "ConflictGraph", "chromatic_lower_bound", "derive_forced", "Falsification",
    "Graph", "GraphFormatError", "bipartition", "dump_graph", "load_graph", "split_partition",
    "srg_params", "closed_sum", "distinct_value_count", "dump_labeling", "load_labeling",
    "strong_revaluation", "verify_list", "verify_multiset", "verify_sum", "Budget",
    "DecisionInstance", "DisResult", "SolveResult", "compute_dis", "compute_dis_s", "decide",
    "decide_list", "export_cnf", "solve_via_cnf",
]
