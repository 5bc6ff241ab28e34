"""A graph with dis = t whose list version needs at least 2t labels (t >= 4).

Construction:

* ``2t - 1`` blocks, each a clique on ``v_1..v_t, u_1..u_t``;
* for ``i < j`` in every block, a path ``v_i - x_ij - y_ij - v_j`` and a path
  ``u_i - a_ij - b_ij - u_j``;
* for every ``(i, i')`` in every block, a path ``v_i - g_ii' - h_ii' - u_i'``;
* an apex ``p`` joined to every ``g`` vertex.

Numbering: block vertices first (block ``k = 1..2t-1``, then ``v_1..v_t``,
``u_1..u_t``), then the x/y pairs, the a/b pairs and the g/h pairs, each in
``(i, j, k)`` lexicographic order, and the apex last.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from ..conflict import chromatic_lower_bound, derive_forced
from ..errors import Falsification
from ..graph import Graph, is_clique
from ..labeling import Labeling, closed_sum, verify_sum

Triple = tuple[int, int, int]


@dataclass
class ListGapGraph:
    t: int
    graph: Graph
    roles: list[str]
    v: dict[tuple[int, int], int]  # (i, k) -> vertex
    u: dict[tuple[int, int], int]
    x: dict[Triple, int]  # (i, j, k) -> vertex
    y: dict[Triple, int]
    a: dict[Triple, int]
    b: dict[Triple, int]
    g: dict[Triple, int]  # (i, i', k) -> vertex
    h: dict[Triple, int]
    p: int
    canonical: list[int] = field(default_factory=list)
    lists: list[frozenset[int]] = field(default_factory=list)

    @property
    def blocks(self) -> int:
        return 2 * self.t - 1

    def gadget_members(self, k: int) -> dict[str, list[int]]:
        """Gadget vertices attached to each block vertex of block ``k``, keyed by role."""
        t = self.t
        out = {}
        for i in range(1, t + 1):
            out[f"v_{i}^{k}"] = [self.x[i, j, k] for j in range(i + 1, t + 1)] + [
                self.y[j, i, k] for j in range(1, i)
            ]
            out[f"u_{i}^{k}"] = [self.a[i, j, k] for j in range(i + 1, t + 1)] + [
                self.b[j, i, k] for j in range(1, i)
            ]
        return out


def list_gap_vertex_count(t: int) -> int:
    pairs = t * (t - 1) // 2
    return 1 + (2 * t - 1) * (2 * t + 4 * pairs + 2 * t * t)


def gen_list_gap(t: int) -> ListGapGraph:
    if t < 4:
        raise ValueError("the construction needs t >= 4")
    blocks = range(1, 2 * t)
    idx = range(1, t + 1)
    roles: list[str] = []

    def new(role: str) -> int:
        roles.append(role)
        return len(roles) - 1

    v, u = {}, {}
    for k in blocks:
        for i in idx:
            v[i, k] = new(f"v_{i}^{k}")
        for i in idx:
            u[i, k] = new(f"u_{i}^{k}")
    lower = [(i, j) for i in idx for j in idx if i < j]
    x, y, a, b, gg, hh = {}, {}, {}, {}, {}, {}
    for (i, j), k in sorted(product(lower, blocks), key=lambda q: (q[0][0], q[0][1], q[1])):
        x[i, j, k] = new(f"x_{i},{j}^{k}")
        y[i, j, k] = new(f"y_{i},{j}^{k}")
    for (i, j), k in sorted(product(lower, blocks), key=lambda q: (q[0][0], q[0][1], q[1])):
        a[i, j, k] = new(f"a_{i},{j}^{k}")
        b[i, j, k] = new(f"b_{i},{j}^{k}")
    for i, i2, k in product(idx, idx, blocks):
        gg[i, i2, k] = new(f"g_{i},{i2}^{k}")
        hh[i, i2, k] = new(f"h_{i},{i2}^{k}")
    p = new("p")

    edges = []
    for k in blocks:
        members = [v[i, k] for i in idx] + [u[i, k] for i in idx]
        edges += [(members[r], members[s]) for r in range(len(members)) for s in range(r + 1, len(members))]
    for (i, j, k), xv in x.items():
        yv = y[i, j, k]
        edges += [(xv, yv), (xv, v[i, k]), (yv, v[j, k])]
    for (i, j, k), av in a.items():
        bv = b[i, j, k]
        edges += [(av, bv), (av, u[i, k]), (bv, u[j, k])]
    for (i, i2, k), gv in gg.items():
        edges += [(gv, hh[i, i2, k]), (gv, v[i, k]), (hh[i, i2, k], u[i2, k]), (p, gv)]
    graph = Graph.from_edges(len(roles), edges)

    out = ListGapGraph(t, graph, roles, v, u, x, y, a, b, gg, hh, p)
    out.canonical = _canonical_labeling(out)
    out.lists = adversarial_lists(out)
    return out


def _spread(count: int, target: int, cap: int) -> list[int]:
    """``count`` values in ``1..cap`` summing to ``target``, largest first."""
    extra = target - count
    if not 0 <= extra <= count * (cap - 1):
        raise ValueError(f"cannot reach {target} with {count} values in 1..{cap}")
    vals = []
    for _ in range(count):
        step = min(cap - 1, extra)
        vals.append(1 + step)
        extra -= step
    return vals


def _canonical_labeling(gen: ListGapGraph) -> list[int]:
    t = gen.t
    f = [0] * gen.graph.n
    for (i, _), vv in gen.v.items():
        f[vv] = i
    for (i, _), uu in gen.u.items():
        f[uu] = i
    for vv in list(gen.g.values()) + list(gen.h.values()):
        f[vv] = 1
    f[gen.p] = t
    # gadget labels: v_i's gadget part sums to t-2+i, u_i's to 2t-2+i
    for k in range(1, gen.blocks + 1):
        members = gen.gadget_members(k)
        for i in range(1, t + 1):
            for role, target in ((f"v_{i}^{k}", t - 2 + i), (f"u_{i}^{k}", 2 * t - 2 + i)):
                for vert, val in zip(members[role], _spread(t - 1, target, t)):
                    f[vert] = val
    return f


def adversarial_lists(gen: ListGapGraph) -> list[frozenset[int]]:
    """``u_i^k`` gets ``{1+k..2t-1+k}``; every other vertex gets ``{1..2t-1}``."""
    t = gen.t
    base = frozenset(range(1, 2 * t))
    lists = [base] * gen.graph.n
    for (_, k), uu in gen.u.items():
        lists[uu] = frozenset(range(1 + k, 2 * t + k))
    return lists


@dataclass
class ListGapCertificate:
    t: int
    degrees_ok: bool
    blocks_ok: bool
    canonical_verifies: bool
    max_label: int
    gadget_sums_ok: bool
    conflict_clique: list[int]
    conflict_bound: int

    @property
    def dis_certified(self) -> bool:
        """Witness uses at most t labels and the conflict clique forces at least t."""
        return (
            self.degrees_ok
            and self.blocks_ok
            and self.canonical_verifies
            and self.max_label == self.t
            and self.gadget_sums_ok
            and self.conflict_bound >= self.t
        )


def certify_list_gap(gen: ListGapGraph) -> ListGapCertificate:
    t, g = gen.t, gen.graph
    want = {}
    for vv in list(gen.v.values()) + list(gen.u.values()):
        want[vv] = 4 * t - 2
    for d in (gen.x, gen.y, gen.a, gen.b, gen.h):
        for vv in d.values():
            want[vv] = 2
    for vv in gen.g.values():
        want[vv] = 3
    want[gen.p] = t * t * (2 * t - 1)
    degrees_ok = len(want) == g.n and all(g.degree(vv) == d for vv, d in want.items())
    blocks_ok = all(
        is_clique(g, [gen.v[i, k] for i in range(1, t + 1)] + [gen.u[i, k] for i in range(1, t + 1)])
        for k in range(1, gen.blocks + 1)
    )
    f = gen.canonical
    sums_ok = True
    for k in range(1, gen.blocks + 1):
        got = sorted(sum(f[m] for m in ms) for ms in gen.gadget_members(k).values())
        sums_ok &= got == list(range(t - 1, 3 * t - 1))
    # the apex sum, re-derived: p labelled t plus t^2 (2t-1) g-vertices labelled 1
    sums_ok &= closed_sum(g, f, gen.p) == t * t * (2 * t - 1) + t
    bound = chromatic_lower_bound(derive_forced(g))
    return ListGapCertificate(
        t,
        degrees_ok,
        blocks_ok,
        verify_sum(g, f) is None,
        max(f),
        sums_ok,
        bound.clique,
        bound.value,
    )


@dataclass(frozen=True)
class ListRefutation:
    """An edge with equal closed sums under a list-respecting labeling."""

    edge: tuple[int, int]
    roles: tuple[str, str]
    sum: int
    via: str  # "pigeonhole" or "scan"


def certify_list_obstruction(gen: ListGapGraph, f: Labeling) -> ListRefutation:
    """Refute a labeling that respects the adversarial lists.

    With ``w = f(p)``, the labels of ``v_i^w`` (in ``1..2t-1``) and ``u_j^w``
    (in ``w+1..w+2t-1``) are bucketed by ``r`` for values ``r`` and ``r + w``.
    ``2t`` vertices fall into ``2t - 1`` buckets, so some bucket holds two: two
    equal v-labels break an x/y edge, two equal u-labels break an a/b edge, and
    ``f(v_i) = r, f(u_j) = r + w`` breaks the edge ``g_ij^w h_ij^w``.
    """
    g, t = gen.graph, gen.t
    if len(f) != g.n:
        raise ValueError("labeling length does not match the graph")
    for vert, x in enumerate(f):
        if x not in gen.lists[vert]:
            raise ValueError(f"label {x} of {gen.roles[vert]} is outside its list")
    w = f[gen.p]
    buckets: dict[int, list[tuple[str, int]]] = {}
    for i in range(1, t + 1):
        buckets.setdefault(f[gen.v[i, w]], []).append(("v", i))
    for j in range(1, t + 1):
        buckets.setdefault(f[gen.u[j, w]] - w, []).append(("u", j))
    edge = None
    for r in sorted(buckets):
        hit = buckets[r]
        if len(hit) < 2:
            continue
        (k1, i1), (k2, i2) = hit[0], hit[1]
        if k1 == k2 == "v":
            edge = (gen.x[min(i1, i2), max(i1, i2), w], gen.y[min(i1, i2), max(i1, i2), w])
        elif k1 == k2 == "u":
            edge = (gen.a[min(i1, i2), max(i1, i2), w], gen.b[min(i1, i2), max(i1, i2), w])
        else:
            vi = i1 if k1 == "v" else i2
            uj = i2 if k1 == "v" else i1
            edge = (gen.g[vi, uj, w], gen.h[vi, uj, w])
        break
    if edge is not None:
        s1, s2 = closed_sum(g, f, edge[0]), closed_sum(g, f, edge[1])
        if s1 == s2:
            return ListRefutation(edge, (gen.roles[edge[0]], gen.roles[edge[1]]), s1, "pigeonhole")
    bad = verify_sum(g, f)
    if bad is None:
        raise Falsification("refutation failed: a list-respecting labeling verifies")
    return ListRefutation((bad.u, bad.v), (gen.roles[bad.u], gen.roles[bad.v]), bad.value_u, "scan")


def shifted_canonical(gen: ListGapGraph) -> list[int]:
    """Canonical labeling moved into the lists: ``u_i^k`` becomes ``i + k``."""
    f = list(gen.canonical)
    for (i, k), uu in gen.u.items():
        f[uu] = i + k
    return f


def random_list_labeling(gen: ListGapGraph, rng: random.Random) -> list[int]:
    return [rng.choice(sorted(lv)) for lv in gen.lists]
