"""Bipartite graphs with dis > t.

Sides ``X = {x_1..x_a}`` and ``Y = {y_1..y_a}`` with ``a = t*t``; for each pair
of non-empty index sets ``(A, B)`` an edge ``z_AB - z'_AB`` with ``z_AB`` joined
to ``x_i`` (i in A) and ``z'_AB`` joined to ``y_j`` (j in B).

The full family has ``2 * (2**a - 1)**2`` z-vertices, which is only buildable for
``t <= 2``. The pruned variant keeps pairs with ``|A|, |B| <= t``, which are
all the refutation below ever uses.

Numbering: ``x_1..x_a``, ``y_1..y_a``, then ``z_AB, z'_AB`` for pairs ordered by
``(|A|, A, |B|, B)``.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from ..errors import Falsification
from ..graph import Graph, bipartition
from ..labeling import Labeling, closed_sum, verify_sum

Subset = tuple[int, ...]  # 1-based sorted indices


@dataclass
class BipartiteHard:
    t: int
    pruned: bool
    graph: Graph
    roles: list[str]
    x: list[int]  # x[i-1] is x_i
    y: list[int]
    z: dict[tuple[Subset, Subset], tuple[int, int]]  # (A, B) -> (z_AB, z'_AB)

    @property
    def alpha(self) -> int:
        return self.t * self.t


def _subsets(alpha: int, max_size: int) -> list[Subset]:
    out = []
    for size in range(1, max_size + 1):
        out.extend(combinations(range(1, alpha + 1), size))
    return out


def bipartite_hard_vertex_count(t: int, pruned: bool) -> int:
    from math import comb

    alpha = t * t
    top = t if pruned else alpha
    subsets = sum(comb(alpha, s) for s in range(1, top + 1))
    return 2 * alpha + 2 * subsets * subsets


def gen_bipartite_hard(t: int, pruned: bool = True) -> BipartiteHard:
    if t < 1:
        raise ValueError("t must be at least 1")
    if not pruned and t > 2:
        raise ValueError(
            f"full variant for t={t} would have {bipartite_hard_vertex_count(t, False)} vertices; use pruned"
        )
    alpha = t * t
    roles = [f"x_{i}" for i in range(1, alpha + 1)] + [f"y_{j}" for j in range(1, alpha + 1)]
    x = list(range(alpha))
    y = list(range(alpha, 2 * alpha))
    subsets = _subsets(alpha, t if pruned else alpha)
    z: dict[tuple[Subset, Subset], tuple[int, int]] = {}
    edges = []
    for a_set in subsets:
        for b_set in subsets:
            name = "{" + ",".join(map(str, a_set)) + "},{" + ",".join(map(str, b_set)) + "}"
            zv, zp = len(roles), len(roles) + 1
            roles += [f"z_{name}", f"z'_{name}"]
            z[a_set, b_set] = (zv, zp)
            edges.append((zv, zp))
            edges += [(zv, x[i - 1]) for i in a_set]
            edges += [(zp, y[j - 1]) for j in b_set]
    graph = Graph.from_edges(len(roles), edges)
    return BipartiteHard(t, pruned, graph, roles, x, y, z)


def check_bipartite_hard(gen: BipartiteHard) -> bool:
    """Structure check: bipartite, and every z/z' pair has exactly the stated neighbours."""
    g = gen.graph
    if bipartition(g) is None:
        return False
    for (a_set, b_set), (zv, zp) in gen.z.items():
        if g.neighbors(zv) != frozenset([zp] + [gen.x[i - 1] for i in a_set]):
            return False
        if g.neighbors(zp) != frozenset([zv] + [gen.y[j - 1] for j in b_set]):
            return False
    return len(gen.x) == len(gen.y) == gen.alpha


@dataclass(frozen=True)
class BipartiteRefutation:
    edge: tuple[int, int]
    a_set: Subset
    b_set: Subset
    sum: int
    reason: str


def refute_bipartite_hard(gen: BipartiteHard, f: Labeling) -> BipartiteRefutation:
    """Find the z-edge that a labeling with values in ``1..t`` fails on.

    If some ``f(x_i) = f(y_j)``, the pair ``({i}, {j})`` fails. Otherwise the
    X- and Y-labels use disjoint value sets; a most frequent X-value ``r`` and
    Y-value ``p`` each occur at least ``t`` times, so ``p`` x's labelled ``r``
    and ``r`` y's labelled ``p`` give two sides summing to ``p * r``.
    """
    t, g = gen.t, gen.graph
    if len(f) != g.n:
        raise ValueError("labeling length does not match the graph")
    if any(not 1 <= val <= t for val in f):
        raise ValueError(f"labels must lie in 1..{t}")
    fx = [f[v] for v in gen.x]
    fy = [f[v] for v in gen.y]
    pos_y = {}
    for j, val in enumerate(fy, start=1):
        pos_y.setdefault(val, j)
    hit = next(((i, pos_y[val]) for i, val in enumerate(fx, start=1) if val in pos_y), None)
    if hit is not None:
        a_set, b_set = (hit[0],), (hit[1],)
        reason = f"f(x_{hit[0]}) = f(y_{hit[1]})"
    else:
        r, count_r = max(Counter(fx).items(), key=lambda kv: (kv[1], -kv[0]))
        p, count_p = max(Counter(fy).items(), key=lambda kv: (kv[1], -kv[0]))
        if count_r < p or count_p < r:
            raise Falsification(f"pigeonhole step failed: r={r} x{count_r}, p={p} x{count_p}")
        a_set = tuple(i for i, val in enumerate(fx, start=1) if val == r)[:p]
        b_set = tuple(j for j, val in enumerate(fy, start=1) if val == p)[:r]
        reason = f"{p} x's labelled {r} vs {r} y's labelled {p}"
    if (a_set, b_set) not in gen.z:
        raise Falsification(f"selected pair {a_set}, {b_set} missing from the graph")
    zv, zp = gen.z[a_set, b_set]
    s1, s2 = closed_sum(g, f, zv), closed_sum(g, f, zp)
    if s1 != s2:
        if verify_sum(g, f) is None:
            raise Falsification("refutation failed: labeling verifies")
        raise Falsification(f"selected edge does not fail ({s1} != {s2})")
    return BipartiteRefutation((zv, zp), a_set, b_set, s1, reason)


def random_small_labeling(gen: BipartiteHard, rng: random.Random) -> list[int]:
    return [rng.randint(1, gen.t) for _ in range(gen.graph.n)]
