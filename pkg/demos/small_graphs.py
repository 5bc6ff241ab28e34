"""Exact values, closed-form bounds and the conflict lower bound on a few named graphs.

Run: python demos/small_graphs.py
"""
from cdlabel import best_upper_bound, chromatic_lower_bound, compute_dis, compute_dis_s, derive_forced
from cdlabel.graph import complete_bipartite, complete_graph, cycle_graph, path_graph, petersen_graph, star_graph

GRAPHS = {
    "P4": path_graph(4),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "K4": complete_graph(4),
    "K1,3": star_graph(3),
    "K2,3": complete_bipartite(2, 3),
    "Petersen": petersen_graph(),
}

print(f"{'graph':<9} {'n':>3} {'dis':>4} {'dis_s':>6} {'conflict lb':>12} {'best bound':<40} witness")
for name, g in GRAPHS.items():
    d = compute_dis(g)
    s = compute_dis_s(g)
    lb = chromatic_lower_bound(derive_forced(g)).value
    report = best_upper_bound(g)
    agg = "-" if report.aggregate is None else f"{report.aggregate} ({','.join(report.best)})"
    print(f"{name:<9} {g.n:>3} {d.value:>4} {s.value:>6} {lb:>12} {agg:<40} {d.witness}")

# The conflict graph explains the lower bound: each pair is forced apart by one edge.
cg = derive_forced(cycle_graph(4))
print("\nC4 forced pairs and the edge forcing each:")
for pair, edges in cg.witnesses.items():
    print(f"  f({pair[0]}) != f({pair[1]})  because of edge {edges[0]}")
