import itertools
from collections import Counter

import pytest

from cdlabel.cnf import CnfFormula
from cdlabel.errors import Falsification
from cdlabel.graph import bipartition, complete_graph, cycle_graph
from cdlabel.labeling import verify_sum
from cdlabel.reductions import (
    fan_values,
    map_assignment_to_labeling_t2,
    map_assignment_to_labeling_t3,
    map_coloring_to_labeling_nt2,
    map_labeling_to_assignment_t2,
    map_labeling_to_assignment_t3,
    map_labeling_to_coloring_nt2,
    reduce_monotone_nae,
    reduce_planar_3sat,
    reduce_t_colorability,
)
from cdlabel.solver import DecisionInstance, decide


def assignments(names):
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


# planar 3SAT

def test_planar_single_clause_structure():
    out = reduce_planar_3sat(CnfFormula.of([[1, 2, 3]]))
    assert out.graph.max_degree == 3
    assert sorted(len(r) for r in out.cycles.values()) == [24, 24, 24]
    path = [out.vertex(f"P1.u{k}") for k in range(1, 9)]
    assert all(out.graph.has_edge(a, b) for a, b in zip(path, path[1:]))
    assert out.graph.degree(out.vertex("P1.u'")) == out.graph.degree(out.vertex("P1.u''")) == 1
    assert out.graph.has_edge(out.vertex("P1.u3"), out.vertex("P1.u'"))
    assert out.graph.has_edge(out.vertex("P1.u6"), out.vertex("P1.u''"))
    assert [a[1] for a in out.attachments] == ["u1", "u1", "u4", "u8"]


def test_planar_is_deterministic():
    phi = CnfFormula.of([[1, -2, 3], [-1, 2, 2]])
    a, b = reduce_planar_3sat(phi), reduce_planar_3sat(phi)
    assert a.graph == b.graph and a.roles == b.roles


def test_planar_rejects_empty_and_overfull():
    with pytest.raises(ValueError):
        reduce_planar_3sat(CnfFormula.of([]))
    with pytest.raises(ValueError, match="sites"):
        reduce_planar_3sat(CnfFormula.of([[1, 1, 1]]))
    with pytest.raises(ValueError, match="3 literals"):
        reduce_planar_3sat(CnfFormula.of([[1, 2]]))


@pytest.mark.parametrize(
    "clauses",
    [[[1, 2, 3]], [[1, -2, 3], [-1, 2, 2]], [[1, 2, 2], [-1, 3, 3], [-3, -2, -2]]],
)
def test_planar_forward_and_back(clauses):
    phi = CnfFormula.of(clauses)
    out = reduce_planar_3sat(phi)
    for gamma in assignments(phi.variables):
        f = map_assignment_to_labeling_t2(out, gamma)
        ok = verify_sum(out.graph, f) is None
        assert ok == phi.satisfied_by(gamma), gamma
        if ok:
            assert map_labeling_to_assignment_t2(out, f) == gamma


def test_planar_unsatisfied_clause_breaks_labeling():
    # the single clause (x or x or x) exceeds the cycle's two red sites, so (x or x or y) stands in
    out = reduce_planar_3sat(CnfFormula.of([[1, 1, 2]]))
    f = map_assignment_to_labeling_t2(out, {1: False, 2: False})
    assert verify_sum(out.graph, f) is not None


def test_planar_backward_rejects_invalid_labeling():
    out = reduce_planar_3sat(CnfFormula.of([[1, 2, 3]]))
    with pytest.raises(ValueError, match="not distinguishing"):
        map_labeling_to_assignment_t2(out, [1] * out.graph.n)
    with pytest.raises(ValueError, match="values 1 and 2"):
        map_labeling_to_assignment_t2(out, [3] * out.graph.n)


def test_planar_solver_round_trip():
    phi = CnfFormula.of([[1, 2, 3], [-1, -2, -3]])
    out = reduce_planar_3sat(phi)
    r = decide(DecisionInstance.uniform(out.graph, 2))
    assert r.satisfiable and phi.satisfied_by(map_labeling_to_assignment_t2(out, r.labeling))


def test_planar_no_instance():
    out = reduce_planar_3sat(CnfFormula.of([[1, 1, 1], [-1, -1, -1]]))
    assert decide(DecisionInstance.uniform(out.graph, 2)).status == "unsat"


# monotone NAE

def test_nae_single_clause_structure():
    out = reduce_monotone_nae(CnfFormula.of([[1, 2, 3]]))
    g = out.graph
    assert sorted(len(r) for r in out.cycles.values()) == [12, 12, 12]
    assert bipartition(g) is not None and g.max_degree == 3
    for side in (1, 2):
        path = [out.vertex(f"P1.c{side}_{k}") for k in range(1, 6)]
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_nae_rejects_negation():
    with pytest.raises(ValueError, match="negated"):
        reduce_monotone_nae(CnfFormula.of([[1, -2, 3]]))


@pytest.mark.parametrize("clauses", [[[1, 2, 3]], [[1, 2, 3], [2, 3, 4]], [[1, 1, 2], [2, 2, 3]]])
def test_nae_forward_and_back(clauses):
    phi = CnfFormula.of(clauses)
    out = reduce_monotone_nae(phi)
    for gamma in assignments(phi.variables):
        f = map_assignment_to_labeling_t3(out, gamma)
        ok = verify_sum(out.graph, f) is None
        assert ok == phi.nae_satisfied_by(gamma), gamma
        if ok:
            assert map_labeling_to_assignment_t3(out, f) == gamma


def test_nae_round_trip_tff():
    out = reduce_monotone_nae(CnfFormula.of([[1, 2, 3]]))
    gamma = {1: True, 2: False, 3: False}
    f = map_assignment_to_labeling_t3(out, gamma)
    assert verify_sum(out.graph, f) is None and map_labeling_to_assignment_t3(out, f) == gamma


def test_nae_all_true_fails():
    out = reduce_monotone_nae(CnfFormula.of([[1, 2, 3]]))
    f = map_assignment_to_labeling_t3(out, {1: True, 2: True, 3: True})
    assert verify_sum(out.graph, f) is not None


@pytest.mark.parametrize("clauses", [[[1, 2, 3]], [[1, 2, 3], [2, 3, 4]], [[1, 2, 3], [4, 5, 6], [1, 4, 2]]])
def test_printed_middle_rule_fails(clauses):
    """With c_3^1 = 1, c_3^2 = 2 exactly when z is false, no NAE assignment yields a valid labeling."""
    phi = CnfFormula.of(clauses)
    out = reduce_monotone_nae(phi)
    tried = 0
    for gamma in assignments(phi.variables):
        if not phi.nae_satisfied_by(gamma):
            continue
        f = map_assignment_to_labeling_t3(out, gamma)
        for ci in range(1, len(clauses) + 1):
            a, b = out.vertex(f"P{ci}.c1_3"), out.vertex(f"P{ci}.c2_3")
            f[a], f[b] = f[b], f[a]
        assert verify_sum(out.graph, f) is not None
        tried += 1
    assert tried > 0


def test_nae_solver_round_trip_and_no_instance():
    phi = CnfFormula.of([[1, 2, 3], [1, 2, 4], [3, 4, 1]])
    out = reduce_monotone_nae(phi)
    r = decide(DecisionInstance.uniform(out.graph, 2))
    assert phi.nae_satisfied_by(map_labeling_to_assignment_t3(out, r.labeling))
    no = reduce_monotone_nae(CnfFormula.of([[1, 1, 2], [2, 2, 3], [3, 3, 1]]))
    assert decide(DecisionInstance.uniform(no.graph, 2)).status == "unsat"


# t-colourability

def test_tcolor_k3_counts():
    out = reduce_t_colorability(complete_graph(3), 3)
    assert (out.params["n_prime"], out.params["alpha"], out.graph.n) == (3, 10, 52)


def test_tcolor_requires_t3():
    with pytest.raises(ValueError):
        reduce_t_colorability(complete_graph(3), 2)


@pytest.mark.parametrize("size, target, t", [(4, 4, 3), (4, 12, 3), (4, 7, 3), (5, 11, 4)])
def test_fan_values(size, target, t):
    vals = fan_values(size, target, t)
    assert len(vals) == size and sum(vals) == target and all(1 <= x <= t for x in vals)


def test_fan_values_unreachable():
    with pytest.raises(ValueError):
        fan_values(3, 10, 3)


@pytest.mark.parametrize("g, c", [(cycle_graph(5), [1, 2, 1, 2, 3]), (complete_graph(3), [1, 2, 3])])
def test_tcolor_forward_and_back(g, c):
    out = reduce_t_colorability(g, 3)
    f = map_coloring_to_labeling_nt2(out, c)
    assert max(f) <= 3 and verify_sum(out.graph, f) is None
    assert map_labeling_to_coloring_nt2(out, f) == c


def test_tcolor_improper_colouring_rejected():
    out = reduce_t_colorability(cycle_graph(5), 3)
    with pytest.raises(ValueError, match="improper"):
        map_coloring_to_labeling_nt2(out, [1, 1, 2, 1, 2])


def test_tcolor_solver_recovers_proper_colourings():
    for g in (complete_graph(3), cycle_graph(5)):
        out = reduce_t_colorability(g, 3)
        r = decide(DecisionInstance.uniform(out.graph, 3))
        c = map_labeling_to_coloring_nt2(out, r.labeling)
        assert all(c[u] != c[v] for u, v in g.edges())
        if g.n == 3:
            assert sorted(c) == [1, 2, 3]


def test_tcolor_k4_no_instance():
    out = reduce_t_colorability(complete_graph(4), 3)
    assert decide(DecisionInstance.uniform(out.graph, 3)).status == "unsat"


def test_tcolor_backward_flags_falsification():
    """A valid labeling with equal z-labels on an edge would contradict the clique forcing."""
    out = reduce_t_colorability(complete_graph(2), 3)
    f = map_coloring_to_labeling_nt2(out, [1, 2])
    f[out.vertex("z^1")] = 1
    with pytest.raises((ValueError, Falsification)):
        map_labeling_to_coloring_nt2(out, f)


def test_role_names_are_unique_and_cover_every_vertex():
    outs = [
        reduce_planar_3sat(CnfFormula.of([[1, -2, 3], [-1, 2, 2]])),
        reduce_monotone_nae(CnfFormula.of([[1, 2, 3], [2, 3, 4]])),
        reduce_t_colorability(cycle_graph(4), 3),
    ]
    for out in outs:
        assert len(out.roles) == out.graph.n and not any(v > 1 for v in Counter(out.roles).values())
