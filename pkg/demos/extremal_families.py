"""The extremal constructions, each checked by its certifier.

Run: python demos/extremal_families.py
"""
import random

from cdlabel.constructions import (
    certify_list_gap,
    certify_list_obstruction,
    counting_lower_bound,
    gen_bipartite_hard,
    gen_list_gap,
    gen_strong_gap,
    random_list_labeling,
    random_small_labeling,
    refute_bipartite_hard,
)
from cdlabel.labeling import distinct_value_count, verify_sum
from cdlabel.solver import compute_dis

rng = random.Random(0)

gen = gen_list_gap(4)
cert = certify_list_gap(gen)
print(f"list gap, t=4: {gen.graph.n} vertices")
print(f"  canonical labeling verifies: {cert.canonical_verifies}, max label {cert.max_label}")
print(f"  conflict clique {cert.conflict_clique} gives dis >= {cert.conflict_bound}")
f = random_list_labeling(gen, rng)
ref = certify_list_obstruction(gen, f)
print(f"  a random list labeling fails on {ref.roles} (sum {ref.sum}, via {ref.via})")

hard = gen_bipartite_hard(2)
f = random_small_labeling(hard, rng)
ref = refute_bipartite_hard(hard, f)
print(f"\nbipartite family, t=2 (pruned): {hard.graph.n} vertices")
print(f"  random {{1,2}}-labeling fails: A={ref.a_set}, B={ref.b_set}, {ref.reason}")
print(f"  t=1 member has exact dis {compute_dis(gen_bipartite_hard(1).graph).value}")

strong = gen_strong_gap(2)
print(f"\nstrong gap, t=2: {strong.graph.n} vertices")
print(f"  two-value labeling verifies: {verify_sum(strong.graph, strong.strong) is None}"
      f" ({distinct_value_count(strong.strong)} values)")
print(f"  exact dis {compute_dis(strong.graph).value}, counting bound {counting_lower_bound(2)}")
print(f"  counting bound at t=10: {counting_lower_bound(10)}")
