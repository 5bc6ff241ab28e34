import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdlabel.graph import (
    Graph,
    GraphFormatError,
    bipartition,
    clique_number,
    closed_neighborhood,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree_sequence,
    dump_graph,
    load_graph,
    path_graph,
    petersen_graph,
    same_closed_neighborhood,
    split_partition,
    srg_params,
    star_graph,
)
from oracles import brute_clique_number, brute_split

C4, K4, P3, P4 = cycle_graph(4), complete_graph(4), path_graph(3), path_graph(4)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def test_load_c4():
    g = load_graph("4 4\n0 1\n1 2\n2 3\n3 0")
    assert (g.n, g.m) == (4, 4) and g == C4


def test_load_self_loop_rejected():
    with pytest.raises(GraphFormatError, match="self-loop"):
        load_graph("2 1\n0 0")


def test_load_p3_degrees():
    g = load_graph("3 2\n0 1\n1 2")
    assert g.degrees() == [1, 2, 1]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "header"),
        ("3 2\n0 1", "declares 2 edges"),
        ("3 1\n0 5", "out of range"),
        ("3 2\n0 1\n1 0", "duplicate"),
        ("3 1\n0 x", "non-integer"),
        ("3 1\n0 1 2", "expected 2"),
    ],
)
def test_load_errors(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        load_graph(text)


def test_load_error_carries_line():
    with pytest.raises(GraphFormatError) as info:
        load_graph("# comment\n3 2\n0 1\n\n1 1\n")
    assert info.value.line == 5


def test_comments_and_bytes():
    assert load_graph(b"# hi\n\n2 1\n# edge\n1 0\n") == path_graph(2)


@given(graphs())
def test_dump_load_round_trip(g):
    assert load_graph(dump_graph(g, ["note"])) == g


@pytest.mark.parametrize(
    "g, v, want",
    [(C4, 0, (0, 1, 3)), (K4, 2, (0, 1, 2, 3)), (P3, 1, (0, 1, 2))],
)
def test_closed_neighborhood(g, v, want):
    assert closed_neighborhood(g, v) == want


@pytest.mark.parametrize("g, u, v, want", [(K4, 0, 1, True), (C4, 0, 1, False), (P3, 0, 2, False)])
def test_same_closed_neighborhood(g, u, v, want):
    assert same_closed_neighborhood(g, u, v) is want


def test_bipartition_examples():
    assert bipartition(C4) == (frozenset({0, 2}), frozenset({1, 3}))
    assert bipartition(complete_graph(3)) is None
    assert bipartition(P3) == (frozenset({0, 2}), frozenset({1}))


def test_split_examples():
    assert split_partition(K4).clique == frozenset(range(4))
    assert split_partition(K4).independent == frozenset()
    assert split_partition(C4) is None
    part = split_partition(star_graph(3))
    assert 0 in part.clique and len(part.clique) == 2 and len(part.independent) == 2


def test_srg_examples():
    p = srg_params(cycle_graph(5))
    assert (p.n, p.k, p.lam, p.mu) == (5, 2, 0, 1)
    p = srg_params(petersen_graph())
    assert (p.n, p.k, p.lam, p.mu) == (10, 3, 0, 1)
    assert srg_params(P4) is None
    assert srg_params(K4) is None and srg_params(Graph(3, [[], [], []])) is None


def test_degree_sequence():
    ds = degree_sequence(star_graph(3))
    assert list(ds.degrees) == [3, 1, 1, 1]
    assert (ds.max, ds.min) == (3, 1)


def test_census_structure(atlas):
    """Split, bipartite and clique queries agree with brute force on every census graph."""
    for G, g in atlas:
        edges = list(g.edges())
        assert (split_partition(g) is not None) == brute_split(g.n, edges)
        assert (bipartition(g) is not None) == nx.is_bipartite(G)
        assert clique_number(g) == brute_clique_number(g.n, edges)


def test_split_partition_is_canonical(atlas):
    for _, g in atlas:
        part = split_partition(g)
        if part is None:
            continue
        K, S = part.clique, part.independent
        assert K | S == frozenset(range(g.n)) and not K & S
        assert all(g.has_edge(a, b) for a in K for b in K if a < b)
        assert not any(g.has_edge(a, b) for a in S for b in S if a < b)
        # maximal: no S-vertex is adjacent to all of K
        assert not any(K <= g.neighbors(s) for s in S)


def test_srg_matches_networkx(atlas):
    for G, g in atlas:
        p = srg_params(g)
        n = G.number_of_nodes()
        complete = G.number_of_edges() == n * (n - 1) // 2
        assert (p is not None) == (nx.is_strongly_regular(G) and not complete and n > 1)
        if p is None:
            continue
        lams = {len(set(G[u]) & set(G[v])) for u, v in G.edges()}
        mus = {len(set(G[u]) & set(G[v])) for u, v in nx.non_edges(G)}
        assert (p.k, {p.lam}, {p.mu}) == (G.degree(0), lams, mus)


@given(graphs(), st.randoms(use_true_random=False))
@settings(max_examples=50)
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert h.m == g.m and sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_induced():
    h, keep = petersen_graph().induced([0, 1, 2, 5])
    assert keep == [0, 1, 2, 5] and h.m == 3


def test_named_graphs():
    assert complete_bipartite(2, 3).m == 6 and petersen_graph().m == 15
    assert star_graph(3).degree(0) == 3
