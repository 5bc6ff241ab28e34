"""Graphs where dis is large but two values suffice for a strong labeling.

A clique on ``v_ij`` (``1 <= i, j <= t``); vertex ``v_ij`` gets ``i`` pendants
``x_1..x_i`` and ``j`` pendants ``y_1..y_j``.

Numbering: clique vertices in ``(i, j)`` order, then for each ``(i, j)`` in the
same order its x-pendants followed by its y-pendants.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, is_clique


@dataclass
class StrongGapGraph:
    t: int
    graph: Graph
    roles: list[str]
    v: dict[tuple[int, int], int]
    x_pendants: dict[tuple[int, int], list[int]]
    y_pendants: dict[tuple[int, int], list[int]]
    strong: list[int]


def gen_strong_gap(t: int, max_t: int = 6) -> StrongGapGraph:
    if t < 1:
        raise ValueError("t must be at least 1")
    if t > max_t:
        raise ValueError(f"t={t} exceeds the size guard {max_t}")
    cells = [(i, j) for i in range(1, t + 1) for j in range(1, t + 1)]
    roles = [f"v_{i},{j}" for i, j in cells]
    v = {c: n for n, c in enumerate(cells)}
    xs: dict[tuple[int, int], list[int]] = {}
    ys: dict[tuple[int, int], list[int]] = {}
    edges = [(v[a], v[b]) for n, a in enumerate(cells) for b in cells[n + 1:]]
    for i, j in cells:
        xs[i, j] = []
        for r in range(1, i + 1):
            xs[i, j].append(len(roles))
            roles.append(f"x_{r}^{i},{j}")
        ys[i, j] = []
        for r in range(1, j + 1):
            ys[i, j].append(len(roles))
            roles.append(f"y_{r}^{i},{j}")
        edges += [(v[i, j], q) for q in xs[i, j] + ys[i, j]]
    graph = Graph.from_edges(len(roles), edges)
    big = graph.max_degree + 1
    strong = [1] * graph.n
    for c in cells:
        strong[v[c]] = big
        for q in xs[c]:
            strong[q] = big
    return StrongGapGraph(t, graph, roles, v, xs, ys, strong)


def check_strong_gap(gen: StrongGapGraph) -> bool:
    t, g = gen.t, gen.graph
    if not is_clique(g, gen.v.values()):
        return False
    return all(
        g.degree(gen.v[i, j]) == t * t + i + j - 1
        and len(gen.x_pendants[i, j]) == i
        and len(gen.y_pendants[i, j]) == j
        for i, j in gen.v
    )


def counting_lower_bound(t: int) -> int:
    """``ceil((t*t + 1) / (2t))``.

    The ``t*t`` clique vertices need distinct pendant sums, and the pendant sum
    at ``v_ij`` lies in ``[2, 2t * dis]``, so ``2t * dis - 1 >= t*t``.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    return -(-(t * t + 1) // (2 * t))
