import pytest
from hypothesis import given

from cdlabel.bounds import (
    Inapplicable,
    best_upper_bound,
    bound_bipartite,
    bound_edge_count,
    bound_half_n,
    bound_max_degree_count,
    bound_s_plus_one,
    bound_srg,
    bound_unique_max,
)
from cdlabel.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from test_graph import graphs

C4, K4, P4 = cycle_graph(4), complete_graph(4), path_graph(4)
PAW = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def edgeless(n):
    return Graph(n, [[] for _ in range(n)])


@pytest.mark.parametrize("g, want", [(petersen_graph(), 7), (C4, 3), (K4, 7)])
def test_s_plus_one(g, want):
    assert bound_s_plus_one(g) == want


@pytest.mark.parametrize("g, want", [(C4, 4), (K4, 6), (P4, 3)])
def test_edge_count(g, want):
    assert bound_edge_count(g) == want


@pytest.mark.parametrize("g, want", [(C4, 3), (K4, 7), (P4, 3)])
def test_max_degree_count(g, want):
    assert bound_max_degree_count(g) == want


def test_unique_max():
    assert bound_unique_max(star_graph(3)) == 4
    assert bound_unique_max(PAW) == 4
    with pytest.raises(Inapplicable):
        bound_unique_max(C4)


def test_srg():
    assert bound_srg(petersen_graph()) == 7
    assert bound_srg(cycle_graph(5)) == 3
    with pytest.raises(Inapplicable):
        bound_srg(P4)


@pytest.mark.parametrize("n, want", [(5, 5), (4, 3), (10, 21)])
def test_half_n(n, want):
    assert bound_half_n(cycle_graph(n)) == want


def test_bipartite():
    assert bound_bipartite(C4) == 2
    # side A (2 vertices) has degree 3; floor(2/1)+1 = 3 and floor(1/2)+1 = 1
    assert bound_bipartite(complete_bipartite(2, 3)) == 1
    with pytest.raises(Inapplicable, match="star"):
        bound_bipartite(star_graph(3))
    with pytest.raises(Inapplicable):
        bound_bipartite(cycle_graph(5))


def test_aggregates():
    assert best_upper_bound(C4).aggregate == 2
    assert best_upper_bound(C4).best == ["bipartite"]
    pet = best_upper_bound(petersen_graph())
    assert pet.aggregate == 7 and {"s_plus_one", "srg"} <= set(pet.best)
    # half_n gives (4-1)^2 // 4 + 1 = 3 for K4
    assert best_upper_bound(K4).aggregate == 3


def test_small_degree_is_inapplicable():
    report = best_upper_bound(path_graph(2))
    assert report.aggregate is None
    assert best_upper_bound(edgeless(3)).aggregate is None


def test_report_rendering():
    r = best_upper_bound(C4)
    assert "aggregate" in r.table()
    lines = r.porcelain().splitlines()
    assert lines[-1].startswith("aggregate\t2\t")
    assert all(len(line.split("\t")) == 3 for line in lines)


@given(graphs(9))
def test_s_plus_one_within_degree_bound(g):
    d = g.max_degree
    if d < 2:
        with pytest.raises(Inapplicable):
            bound_s_plus_one(g)
    else:
        assert bound_s_plus_one(g) <= d * d - d + 1
        assert bound_max_degree_count(g) <= d * d - d + 1
