"""Closed-form upper bounds on dis (via dis <= dis_list) and a best-bound aggregator."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bipartition, degree_sequence, srg_params


class Inapplicable(ValueError):
    """A bound's hypothesis does not hold for the given graph."""


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int | None
    reason: str
    inputs: dict = field(default_factory=dict)

    @property
    def applicable(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...]

    @property
    def aggregate(self) -> int | None:
        vals = [e.value for e in self.entries if e.value is not None]
        return min(vals) if vals else None

    @property
    def best(self) -> list[str]:
        agg = self.aggregate
        return [e.name for e in self.entries if e.value is not None and e.value == agg]

    def table(self) -> str:
        width = max(len(e.name) for e in self.entries)
        rows = [f"{'bound':<{width}}  value  note"]
        for e in self.entries:
            val = "n/a" if e.value is None else str(e.value)
            rows.append(f"{e.name:<{width}}  {val:>5}  {e.reason}")
        rows.append(f"{'aggregate':<{width}}  {self.aggregate if self.aggregate is not None else 'n/a':>5}")
        return "\n".join(rows)

    def porcelain(self) -> str:
        lines = [
            f"{e.name}\t{'n/a' if e.value is None else e.value}\t{e.reason}" for e in self.entries
        ]
        lines.append(f"aggregate\t{'n/a' if self.aggregate is None else self.aggregate}\tmin of applicable")
        return "\n".join(lines) + "\n"


def _need_maxdeg_two(g: Graph) -> int:
    d = g.max_degree
    if d <= 1:
        raise Inapplicable(f"max degree {d} <= 1")
    return d


def s_value(g: Graph) -> int:
    """``d_1 + ... + d_D - D`` over the non-increasing degree sequence, ``D`` the max degree."""
    seq = degree_sequence(g).degrees
    d = seq[0]
    return sum(seq[:d]) - d


def bound_s_plus_one(g: Graph) -> int:
    d = _need_maxdeg_two(g)
    value = s_value(g) + 1
    assert value <= d * d - d + 1, "s + 1 exceeded maxdeg^2 - maxdeg + 1"
    return value


def bound_edge_count(g: Graph) -> int:
    _need_maxdeg_two(g)
    return g.m


def bound_max_degree_count(g: Graph) -> int:
    d = _need_maxdeg_two(g)
    t = sum(1 for x in g.degrees() if x == d)
    return min(d * d - 2 * d + t + 1, d * d - d + 1)


def bound_unique_max(g: Graph) -> int:
    d = _need_maxdeg_two(g)
    t = sum(1 for x in g.degrees() if x == d)
    if t != 1:
        raise Inapplicable(f"{t} vertices attain the max degree")
    return d * d - 3 * d + 4


def bound_srg(g: Graph) -> int:
    p = srg_params(g)
    if p is None:
        raise Inapplicable("not strongly regular")
    return p.k * (p.k - p.lam - 1) + 1


def bound_half_n(g: Graph) -> int:
    """``floor(((n-1)/2)**2) + 1``; the floor is exact since the bound caps an integer."""
    _need_maxdeg_two(g)
    return (g.n - 1) ** 2 // 4 + 1


def _components(g: Graph) -> int:
    seen = [False] * g.n
    count = 0
    for r in range(g.n):
        if seen[r]:
            continue
        count += 1
        seen[r] = True
        stack = [r]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
    return count


def bound_bipartite(g: Graph) -> int:
    """``min(floor((D_A-1)/(d_B2-1)) + 1, floor((D_B-1)/(d_A2-1)) + 1)`` for connected bipartite non-stars.

    ``D_X`` is the max degree on side X and ``d_X2`` the least degree >= 2 on
    side X. The square-root-of-edges term carries an unspecified constant and
    is left out.
    """
    parts = bipartition(g)
    if parts is None:
        raise Inapplicable("not bipartite")
    if g.n == 0 or _components(g) != 1:
        raise Inapplicable("not connected")
    a_side, b_side = parts
    if min(len(a_side), len(b_side)) <= 1:
        raise Inapplicable("star")
    deg = g.degrees()
    big_a = [deg[x] for x in a_side if deg[x] >= 2]
    big_b = [deg[x] for x in b_side if deg[x] >= 2]
    if not big_a or not big_b:
        raise Inapplicable("a side has no vertex of degree >= 2")
    max_a, max_b = max(deg[x] for x in a_side), max(deg[x] for x in b_side)
    return min((max_a - 1) // (min(big_b) - 1) + 1, (max_b - 1) // (min(big_a) - 1) + 1)


BOUNDS = (
    ("s_plus_one", bound_s_plus_one, "s + 1 with s = d_1 + ... + d_D - D"),
    ("edge_count", bound_edge_count, "number of edges"),
    ("max_degree_count", bound_max_degree_count, "min(D^2 - 2D + t + 1, D^2 - D + 1)"),
    ("unique_max", bound_unique_max, "D^2 - 3D + 4, single max-degree vertex"),
    ("srg", bound_srg, "k(k - lambda - 1) + 1"),
    ("half_n", bound_half_n, "floor(((n - 1)/2)^2) + 1"),
    ("bipartite", bound_bipartite, "bipartite floor terms"),
)


def best_upper_bound(g: Graph) -> BoundReport:
    entries = []
    for name, fn, formula in BOUNDS:
        try:
            entries.append(BoundEntry(name, fn(g), formula, {"n": g.n, "m": g.m, "maxdeg": g.max_degree}))
        except Inapplicable as exc:
            entries.append(BoundEntry(name, None, str(exc)))
    return BoundReport(tuple(entries))
