"""Forced label inequalities and the chromatic lower bound they give.

If an edge ``uv`` has ``N[u] minus N[v] = {a}`` and ``N[v] minus N[u] = {b}``, every
valid labeling has ``f(a) != f(b)``. Collecting those pairs gives a conflict
graph that any valid labeling properly colours, so its chromatic number is a
lower bound on dis and on dis_s. Larger symmetric differences only give
disjunctions and are not used.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal

from .graph import Graph
from .solver import DEFAULT_BUDGET, Budget


@dataclass(frozen=True)
class ConflictGraph:
    graph: Graph
    witnesses: dict[tuple[int, int], tuple[tuple[int, int], ...]]  # (a, b) -> edges (u, v)

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.witnesses)


def derive_forced(g: Graph) -> ConflictGraph:
    found: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in g.edges():
        a_side = g.closed(u) - g.closed(v)
        b_side = g.closed(v) - g.closed(u)
        if len(a_side) == 1 and len(b_side) == 1:
            (a,), (b,) = a_side, b_side
            key = (min(a, b), max(a, b))
            found.setdefault(key, []).append((u, v))
    cg = Graph.from_edges(g.n, found)
    return ConflictGraph(cg, {k: tuple(w) for k, w in sorted(found.items())})


@dataclass
class ChromaticBound:
    """``value`` is certified by ``coloring`` (exact) or by ``clique`` (lower bound only)."""

    value: int
    kind: Literal["exact", "clique"]
    clique: list[int]
    coloring: list[int] | None = None
    upper: int | None = None
    stats: dict = field(default_factory=dict)


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique found by greedy growth from every vertex plus one-swap improvement."""
    best: list[int] = [0] if g.n else []
    for start in range(g.n):
        clique = [start]
        cand = set(g.neighbors(start))
        while cand:
            v = max(cand, key=lambda x: (len(g.neighbors(x) & cand), -x))
            clique.append(v)
            cand &= g.neighbors(v)
        if len(clique) > len(best):
            best = sorted(clique)
    # (1,2)-swap: drop one member, add two
    improved = True
    while improved:
        improved = False
        members = set(best)
        for drop in list(best):
            rest = members - {drop}
            common = set(range(g.n)) - members
            for x in rest:
                common &= g.neighbors(x)
            common = sorted(common)
            for i, a in enumerate(common):
                hit = next((b for b in common[i + 1:] if g.has_edge(a, b)), None)
                if hit is not None:
                    best = sorted(rest | {a, hit})
                    improved = True
                    break
            if improved:
                break
    return best


def _dsatur_order_color(g: Graph) -> list[int]:
    color = [-1] * g.n
    sat: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (x for x in range(g.n) if color[x] < 0),
            key=lambda x: (len(sat[x]), g.degree(x), -x),
        )
        c = 0
        while c in sat[v]:
            c += 1
        color[v] = c
        for u in g.adj[v]:
            sat[u].add(c)
    return color


class _Timeout(Exception):
    pass


def _exact_coloring(g: Graph, lower: int, upper_coloring: list[int], budget: Budget, stats: dict):
    """Branch and bound (DSATUR branching). Returns an optimal colouring."""
    best = list(upper_coloring)
    best_k = max(best) + 1 if best else 0
    if best_k <= lower:
        return best
    color = [-1] * g.n
    deadline = time.perf_counter() + budget.max_seconds
    nodes = 0

    def rec(colored: int, used: int) -> bool:
        nonlocal best, best_k, nodes
        nodes += 1
        if nodes > budget.max_nodes or (nodes & 1023 == 0 and time.perf_counter() > deadline):
            raise _Timeout
        if used >= best_k:
            return False
        if colored == g.n:
            best, best_k = list(color), used
            return best_k <= lower
        v, forbidden = -1, set()
        key = None
        for x in range(g.n):
            if color[x] >= 0:
                continue
            fx = {color[u] for u in g.adj[x] if color[u] >= 0}
            kx = (len(fx), g.degree(x), -x)
            if key is None or kx > key:
                key, v, forbidden = kx, x, fx
        for c in range(used + 1):
            if c in forbidden or c >= best_k:
                continue
            color[v] = c
            if rec(colored + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    try:
        rec(0, 0)
        stats["complete"] = True
    finally:
        stats["nodes"] = nodes
    return best


def chromatic_lower_bound(cg: ConflictGraph | Graph, budget: Budget = DEFAULT_BUDGET) -> ChromaticBound:
    """Exact chromatic number per component when the budget allows, else a clique bound.

    An empty conflict graph on a non-empty vertex set yields 1.
    """
    g = cg.graph if isinstance(cg, ConflictGraph) else cg
    if g.n == 0:
        return ChromaticBound(0, "exact", [], [])
    clique = greedy_clique(g)
    coloring = [0] * g.n
    exact = True
    stats: dict = {"nodes": 0}
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        for v in comp:
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
        sub, ids = g.induced(comp)
        if sub.m == 0:
            continue
        sub_clique = greedy_clique(sub)
        start = _dsatur_order_color(sub)
        sub_stats: dict = {}
        try:
            col = _exact_coloring(sub, len(sub_clique), start, budget, sub_stats)
        except _Timeout:
            col = start
            exact = False
        stats["nodes"] += sub_stats.get("nodes", 0)
        for i, v in enumerate(ids):
            coloring[v] = col[i]
    colors_used = max(coloring) + 1
    if exact:
        return ChromaticBound(colors_used, "exact", clique, coloring, colors_used, stats)
    return ChromaticBound(len(clique), "clique", clique, None, colors_used, stats)


def dump_witnesses(cg: ConflictGraph) -> str:
    lines = []
    for (a, b), edges in cg.witnesses.items():
        for u, v in edges:
            lines.append(f"{a} {b} via {u} {v}")
    return "\n".join(lines) + ("\n" if lines else "")
