import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdlabel.constructions import (
    adversarial_lists,
    bipartite_hard_vertex_count,
    bipartite_two_value_labeling,
    certify_list_gap,
    certify_list_obstruction,
    check_bipartite_hard,
    check_strong_gap,
    counting_lower_bound,
    gen_bipartite_hard,
    gen_list_gap,
    gen_strong_gap,
    list_gap_vertex_count,
    random_list_labeling,
    random_small_labeling,
    random_split_graph,
    refute_bipartite_hard,
    shifted_canonical,
    split_greedy_labeling,
    split_strong_labeling,
)
from cdlabel.errors import Falsification
from cdlabel.graph import (
    clique_number,
    complete_graph,
    cycle_graph,
    path_graph,
    split_partition,
    star_graph,
)
from cdlabel.labeling import distinct_value_count, verify_list, verify_sum
from cdlabel.solver import compute_dis
from oracles import brute_exists


@pytest.fixture(scope="module")
def t4():
    return gen_list_gap(4)


# list gap family

def test_list_gap_t4_counts(t4):
    assert t4.graph.n == list_gap_vertex_count(4) == 1 + 7 * (8 + 2 * 6 + 2 * 6 + 2 * 16) == 449
    assert t4.blocks == 7


def test_list_gap_canonical(t4):
    assert verify_sum(t4.graph, t4.canonical) is None and max(t4.canonical) == 4
    cert = certify_list_gap(t4)
    assert cert.dis_certified and cert.conflict_bound >= 4
    assert set(cert.conflict_clique) <= set(t4.v.values()) | set(t4.u.values())


def test_list_gap_rejects_small_t():
    with pytest.raises(ValueError):
        gen_list_gap(3)


def test_list_gap_lists(t4):
    assert t4.lists == adversarial_lists(t4)
    assert all(len(lv) == 2 * 4 - 1 for lv in t4.lists)


def test_obstruction_on_shifted_canonical(t4):
    f = shifted_canonical(t4)
    assert verify_list(t4.graph, f, t4.lists) is not None
    ref = certify_list_obstruction(t4, f)
    assert ref.via == "pigeonhole"


def test_obstruction_precondition(t4):
    f = list(t4.canonical)
    f[t4.u[4, 1]] = 1  # outside {2..8}
    with pytest.raises(ValueError, match="outside its list"):
        certify_list_obstruction(t4, f)


def test_obstruction_random_sample(t4):
    rng = random.Random(1)
    for _ in range(200):
        f = random_list_labeling(t4, rng)
        ref = certify_list_obstruction(t4, f)
        u, v = ref.edge
        assert sum(f[w] for w in t4.graph.closed(u)) == sum(f[w] for w in t4.graph.closed(v)) == ref.sum


# bipartite family with dis > t

@pytest.mark.parametrize("t, pruned, n", [(1, True, 4), (2, True, 208), (2, False, 458)])
def test_bipartite_hard_sizes(t, pruned, n):
    gen = gen_bipartite_hard(t, pruned)
    assert gen.graph.n == n == bipartite_hard_vertex_count(t, pruned)
    assert check_bipartite_hard(gen)


def test_bipartite_hard_full_guard():
    with pytest.raises(ValueError, match="pruned"):
        gen_bipartite_hard(3, pruned=False)


def test_bipartite_hard_t1_needs_two_labels():
    gen = gen_bipartite_hard(1)
    G = nx.Graph(list(gen.graph.edges()))
    assert not brute_exists(G, 1)
    assert compute_dis(gen.graph).value == 2


def test_refute_constant():
    gen = gen_bipartite_hard(2)
    ref = refute_bipartite_hard(gen, [1] * gen.graph.n)
    assert len(ref.a_set) == len(ref.b_set) == 1


def test_refute_split_sides():
    gen = gen_bipartite_hard(2)
    f = [1] * gen.graph.n
    for v in gen.y:
        f[v] = 2
    ref = refute_bipartite_hard(gen, f)
    # r = 1 on X and p = 2 on Y: two x's labelled 1 against one y labelled 2
    assert (len(ref.a_set), len(ref.b_set)) == (2, 1)
    assert ref.sum == 1 + 1 + 2  # z and z' labelled 1, plus either side


def test_refute_rejects_out_of_range():
    gen = gen_bipartite_hard(2)
    with pytest.raises(ValueError):
        refute_bipartite_hard(gen, [3] * gen.graph.n)


def test_refute_full_variant_samples():
    gen = gen_bipartite_hard(2, pruned=False)
    rng = random.Random(3)
    for _ in range(100):
        refute_bipartite_hard(gen, random_small_labeling(gen, rng))


def test_refute_raises_falsification_when_pair_missing():
    gen = gen_bipartite_hard(2)
    kept = {k: v for k, v in gen.z.items() if len(k[0]) == 1}
    gen.z = kept
    f = [1] * gen.graph.n
    for v in gen.y:
        f[v] = 2
    with pytest.raises(Falsification):
        refute_bipartite_hard(gen, f)


# strong labeling gap family

@pytest.mark.parametrize("t, n", [(1, 3), (2, 16), (3, 45)])
def test_strong_gap_sizes(t, n):
    gen = gen_strong_gap(t)
    assert gen.graph.n == n and check_strong_gap(gen)
    assert verify_sum(gen.graph, gen.strong) is None
    assert distinct_value_count(gen.strong) == 2


def test_strong_gap_guard():
    with pytest.raises(ValueError):
        gen_strong_gap(7)


@pytest.mark.parametrize("t, want", [(1, 1), (2, 2), (10, 6)])
def test_counting_lower_bound(t, want):
    assert counting_lower_bound(t) == want


def test_counting_bound_matches_exact_dis_t2():
    assert compute_dis(gen_strong_gap(2).graph).value >= counting_lower_bound(2)


# bipartite two-value labeling

@pytest.mark.parametrize("g", [cycle_graph(4), cycle_graph(6), path_graph(2), star_graph(4)])
def test_bipartite_two_values(g):
    f = bipartite_two_value_labeling(g)
    assert verify_sum(g, f) is None and distinct_value_count(f) <= 2


def test_bipartite_two_values_c4_pattern():
    assert bipartite_two_value_labeling(cycle_graph(4)) == [1, 2, 1, 2]


def test_bipartite_two_values_rejects_odd_cycle():
    with pytest.raises(ValueError):
        bipartite_two_value_labeling(cycle_graph(5))


# split graphs

def test_split_k4():
    assert split_greedy_labeling(complete_graph(4)) == [1] * 4
    assert split_strong_labeling(complete_graph(4)) == [1] * 4


def test_split_star():
    f = split_greedy_labeling(star_graph(3))
    assert verify_sum(star_graph(3), f) is None and max(f) <= 4
    fs = split_strong_labeling(star_graph(3))
    assert verify_sum(star_graph(3), fs) is None and distinct_value_count(fs) <= 3


def test_split_rejects_non_split():
    with pytest.raises(ValueError, match="not split"):
        split_greedy_labeling(cycle_graph(4))


def test_split_strong_overflow_guard():
    g = random_split_graph(3, 8, random.Random(0))
    with pytest.raises(OverflowError):
        split_strong_labeling(g, max_bits=4)


def test_split_on_every_census_split_graph(atlas):
    count = 0
    for _, g in atlas:
        if split_partition(g) is None:
            continue
        w = clique_number(g)
        f = split_greedy_labeling(g)
        assert verify_sum(g, f) is None and max(f) <= max(1, w * w)
        assert verify_sum(g, split_strong_labeling(g)) is None
        count += 1
    assert count > 100


@given(st.integers(1, 6), st.integers(0, 10), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_random_split_graphs(omega, s_size, seed):
    g = random_split_graph(omega, s_size, random.Random(seed))
    assert clique_number(g) == omega and len(split_partition(g).clique) == omega
    f = split_greedy_labeling(g)
    assert verify_sum(g, f) is None and max(f) <= omega * omega


def test_random_split_graph_validation():
    with pytest.raises(ValueError):
        random_split_graph(0, 3, random.Random(0))
