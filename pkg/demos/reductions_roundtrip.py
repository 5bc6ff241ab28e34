"""Compile small instances through the three hardness reductions and back.

Run: python demos/reductions_roundtrip.py
"""
import networkx as nx

from cdlabel.cnf import CnfFormula
from cdlabel.graph import Graph
from cdlabel.reductions import (
    map_labeling_to_assignment_t2,
    map_labeling_to_assignment_t3,
    map_labeling_to_coloring_nt2,
    reduce_monotone_nae,
    reduce_planar_3sat,
    reduce_t_colorability,
)
from cdlabel.solver import DecisionInstance, decide


def solve(out, k):
    r = decide(DecisionInstance.uniform(out.graph, k))
    return r, f"{out.graph.n} vertices, {r.status} after {r.stats.nodes} nodes"


for clauses in ([[1, -2, 3], [-1, 2, 2]], [[1, 1, 1], [-1, -1, -1]]):
    out = reduce_planar_3sat(CnfFormula.of(clauses))
    r, msg = solve(out, 2)
    extra = f", assignment {map_labeling_to_assignment_t2(out, r.labeling)}" if r.satisfiable else ""
    print(f"3SAT {clauses}: {msg}{extra}")

for clauses in ([[1, 2, 3], [2, 3, 4]], [[1, 1, 2], [2, 2, 3], [3, 3, 1]]):
    out = reduce_monotone_nae(CnfFormula.of(clauses))
    r, msg = solve(out, 2)
    extra = f", assignment {map_labeling_to_assignment_t3(out, r.labeling)}" if r.satisfiable else ""
    print(f"NAE  {clauses}: {msg}{extra}")

for name, G in (("C5", nx.cycle_graph(5)), ("W5", nx.wheel_graph(6)), ("K4", nx.complete_graph(4))):
    g = Graph.from_edges(G.number_of_nodes(), G.edges())
    out = reduce_t_colorability(g, 3)
    r, msg = solve(out, 3)
    extra = f", colouring {map_labeling_to_coloring_nt2(out, r.labeling)}" if r.satisfiable else ""
    print(f"3-colour {name}: {msg}{extra}")
