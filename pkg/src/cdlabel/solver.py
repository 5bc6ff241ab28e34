"""Exact decision and optimisation for closed distinguishing labelings.

Every constrained edge ``uv`` is reduced to the shared-part-cancelled form
``sum_A f - sum_B f != 0`` with ``A = N[u] minus N[v]`` and ``B = N[v] minus N[u]``.
The search assigns vertices in a fixed order, keeps the partial value of each
constraint up to date, and prunes the single value that would zero a
constraint once only one of its vertices is still open. Vertices whose live
domain shrinks to one value are assigned immediately.

Twins with equal domains are interchangeable: swapping the labels of two
vertices with the same open neighbourhood swaps their sums and leaves every
other sum alone, and for equal closed neighbourhoods nothing changes at all.
The search therefore only tries labelings that are non-decreasing along each
twin class (ordered by index).

Side sums that are pairwise forced apart (for example the private pendant sets
of a clique's vertices) form an all-different group. Each side sum has an
interval of reachable values, and the group fails as soon as more sums are
confined to an interval than it holds integers (Hall's condition).

Multiset mode uses the same engine: label ``c`` is given weight
``(maxdeg + 2) ** rank(c)``, under which equal weighted sums on the two sides of
an edge mean equal label multisets.
"""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .cnf import CnfFormula, dpll
from .graph import Graph
from .labeling import (
    ListAssignment,
    check_lists,
    strong_revaluation,
    verify_multiset,
    verify_sum,
)

Mode = Literal["sum", "multiset"]


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10**8
    max_seconds: float = 60.0


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class DecisionInstance:
    """A graph, a mode and per-vertex value domains.

    Build with :meth:`uniform` for ``{1..k}`` everywhere or :meth:`with_lists`.
    """

    graph: Graph
    mode: Mode
    domains: tuple[tuple[int, ...], ...]
    k: int | None = None

    @classmethod
    def uniform(cls, g: Graph, k: int, mode: Mode = "sum") -> "DecisionInstance":
        if k < 1:
            raise ValueError("k must be at least 1")
        _check_mode(mode)
        dom = tuple(range(1, k + 1))
        return cls(g, mode, (dom,) * g.n, k)

    @classmethod
    def with_lists(cls, g: Graph, lists: ListAssignment, mode: Mode = "sum") -> "DecisionInstance":
        _check_mode(mode)
        check_lists(g, lists)
        return cls(g, mode, tuple(tuple(sorted(lv)) for lv in lists), None)


def _check_mode(mode: str) -> None:
    if mode not in ("sum", "multiset"):
        raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class EdgeConstraint:
    """``sum(f[a] for a in plus) != sum(f[b] for b in minus)``, derived from edge ``(u, v)``."""

    u: int
    v: int
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    @property
    def scope(self) -> tuple[int, ...]:
        return self.plus + self.minus


def edge_constraints(g: Graph, mode: Mode = "sum") -> list[EdgeConstraint]:
    """Constraints of all edges that can ever be violated.

    Twin edges are dropped. In sum mode an edge with one side of the symmetric
    difference empty is dropped (positive labels make it hold automatically);
    in multiset mode edges whose sides differ in size are dropped likewise.
    """
    out = []
    for u, v in g.edges():
        nu, nv = g.closed(u), g.closed(v)
        if nu == nv:
            continue
        plus = tuple(sorted(nu - nv))
        minus = tuple(sorted(nv - nu))
        if mode == "sum" and (not plus or not minus):
            continue
        if mode == "multiset" and len(plus) != len(minus):
            continue
        out.append(EdgeConstraint(u, v, plus, minus))
    return out


@dataclass
class SolveStats:
    nodes: int = 0
    propagations: int = 0
    seconds: float = 0.0


@dataclass
class SolveResult:
    status: Literal["sat", "unsat", "budget"]
    labeling: list[int] | None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def satisfiable(self) -> bool:
        return self.status == "sat"


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, inst: DecisionInstance, budget: Budget):
        g = inst.graph
        self.inst = inst
        self.budget = budget
        self.n = g.n
        if inst.mode == "sum":
            self.weight = {x: x for dom in inst.domains for x in dom}
        else:
            base = g.max_degree + 2
            values = sorted({x for dom in inst.domains for x in dom})
            self.weight = {x: base**i for i, x in enumerate(values)}
        self.label_of = {w: x for x, w in self.weight.items()}
        self.wdom = [sorted(self.weight[x] for x in dom) for dom in inst.domains]

        cons = []
        for c in edge_constraints(g, inst.mode):
            lo_p = sum(self.wdom[a][0] for a in c.plus)
            hi_p = sum(self.wdom[a][-1] for a in c.plus)
            lo_m = sum(self.wdom[b][0] for b in c.minus)
            hi_m = sum(self.wdom[b][-1] for b in c.minus)
            if hi_p < lo_m or hi_m < lo_p:
                continue
            cons.append(c)
        self.constraints = cons
        self.members = [[(a, 1) for a in c.plus] + [(b, -1) for b in c.minus] for c in cons]
        self.occ: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for ci, mem in enumerate(self.members):
            for x, coef in mem:
                self.occ[x].append((ci, coef))
        self.order = self._static_order(g)
        self.prev, self.next = self._twin_chains(g)
        self._build_groups()
        self.stats = SolveStats()

    def _build_groups(self) -> None:
        """Greedy cliques of size >= 3 in the 'sums must differ' graph on constraint sides."""
        ids: dict[tuple[int, ...], int] = {}
        adj: list[set[int]] = []

        def side(vs: tuple[int, ...]) -> int:
            if vs not in ids:
                ids[vs] = len(ids)
                adj.append(set())
            return ids[vs]

        for c in self.constraints:
            a, b = side(c.plus), side(c.minus)
            adj[a].add(b)
            adj[b].add(a)
        sides = list(ids)
        groups, covered = [], set()
        for e in sorted(range(len(sides)), key=lambda x: (-len(adj[x]), x)):
            if e in covered or len(adj[e]) < 2:
                continue
            clique, cand = [e], set(adj[e])
            while cand:
                nxt = max(cand, key=lambda x: (len(adj[x] & cand), -x))
                clique.append(nxt)
                cand &= adj[nxt]
            if len(clique) >= 3:
                groups.append(sorted(clique))
                covered.update(clique)
        used = sorted({e for grp in groups for e in grp})
        local = {e: i for i, e in enumerate(used)}
        self.side_members = [sides[e] for e in used]
        self.groups = [[local[e] for e in grp] for grp in groups]
        self.side_groups: list[list[int]] = [[] for _ in used]
        for gi, grp in enumerate(self.groups):
            for e in grp:
                self.side_groups[e].append(gi)
        self.sides_of: list[list[int]] = [[] for _ in range(self.n)]
        for e, members in enumerate(self.side_members):
            for x in members:
                self.sides_of[x].append(e)
        # reachable interval of each side: lo = fixed + open_lo, hi = fixed + open_hi
        self.side_lo = [sum(self.wdom[x][0] for x in m) for m in self.side_members]
        self.side_hi = [sum(self.wdom[x][-1] for x in m) for m in self.side_members]

    def _hall_ok(self, gi: int) -> bool:
        ivs = sorted((self.side_hi[e], self.side_lo[e]) for e in self.groups[gi])
        for a in sorted({lo for _, lo in ivs}):
            inside = 0
            for hi, lo in ivs:
                if lo >= a:
                    inside += 1
                    if inside > hi - a + 1:
                        return False
        return True

    def _twin_chains(self, g: Graph) -> tuple[list[int], list[int]]:
        prev, nxt = [-1] * self.n, [-1] * self.n
        classes: dict[tuple, list[int]] = {}
        for v in self.order:
            dom = tuple(self.wdom[v])
            classes.setdefault(("open", g.adj[v], dom), []).append(v)
            classes.setdefault(("closed", tuple(sorted(g.closed(v))), dom), []).append(v)
        for members in classes.values():
            members.sort()
            for a, b in zip(members, members[1:]):
                prev[b], nxt[a] = a, b
        return prev, nxt

    def _static_order(self, g: Graph) -> list[int]:
        """Greedy order that completes small constraints early.

        A vertex scores ``2**-(r-1)`` for each constraint that still has ``r``
        unplaced vertices including it; the highest score goes next, ties by
        descending degree then index. Only constrained vertices are ordered.
        """
        active = [v for v in range(self.n) if self.occ[v]]
        rem = [len(m) for m in self.members]
        score = [0.0] * self.n
        for v in active:
            score[v] = sum(2.0 ** -(rem[ci] - 1) for ci, _ in self.occ[v])
        placed = [False] * self.n
        order = []
        pool = set(active)
        while pool:
            v = max(pool, key=lambda x: (score[x], g.degree(x), -x))
            pool.discard(v)
            placed[v] = True
            order.append(v)
            for ci, _ in self.occ[v]:
                old = 2.0 ** -(rem[ci] - 1)
                rem[ci] -= 1
                if rem[ci] == 0:
                    continue
                new = 2.0 ** -(rem[ci] - 1)
                for x, _ in self.members[ci]:
                    if not placed[x]:
                        score[x] += new - old
        return order

    def run(self) -> SolveResult:
        t0 = time.perf_counter()
        self.deadline = t0 + self.budget.max_seconds
        self.val = [0] * self.n
        self.live = [set(d) for d in self.wdom]
        self.partial = [0] * len(self.constraints)
        self.count = [len(m) for m in self.members]
        self.trail: list[tuple[int, int]] = []
        self.stack: list[int] = []
        need = len(self.order) + 200
        if sys.getrecursionlimit() < need:
            sys.setrecursionlimit(need)
        try:
            queue = [v for v in self.order if len(self.live[v]) == 1]
            ok = (
                all(self._hall_ok(gi) for gi in range(len(self.groups)))
                and self._propagate(queue)
                and self._solve(0)
            )
            status = "sat" if ok else "unsat"
        except _BudgetExceeded:
            status = "budget"
        self.stats.seconds = time.perf_counter() - t0
        if status != "sat":
            return SolveResult(status, None, self.stats)
        labeling = []
        for v in range(self.n):
            w = self.val[v] if self.val[v] else self.wdom[v][0]
            labeling.append(self.label_of[w])
        return SolveResult("sat", labeling, self.stats)

    def _assign(self, v: int, w: int, queue: list[int]) -> bool:
        self.val[v] = w
        self.stack.append(v)
        occ = self.occ[v]
        partial, count = self.partial, self.count
        for ci, coef in occ:
            partial[ci] += coef * w
            count[ci] -= 1
        dom = self.wdom[v]
        touched = set()
        for e in self.sides_of[v]:
            self.side_lo[e] += w - dom[0]
            self.side_hi[e] += w - dom[-1]
            touched.update(self.side_groups[e])
        p, q = self.prev[v], self.next[v]
        if (p >= 0 and self.val[p] > w) or (q >= 0 and 0 < self.val[q] < w):
            return False
        for ci, _ in occ:
            c = count[ci]
            if c == 0:
                if partial[ci] == 0:
                    return False
            elif c == 1:
                for x, cx in self.members[ci]:
                    if not self.val[x]:
                        break
                bad = -partial[ci] * cx
                lx = self.live[x]
                if bad in lx:
                    lx.remove(bad)
                    self.trail.append((x, bad))
                    self.stats.propagations += 1
                    if not lx:
                        return False
                    if len(lx) == 1:
                        queue.append(x)
        return all(self._hall_ok(gi) for gi in touched)

    def _propagate(self, queue: list[int]) -> bool:
        while queue:
            x = queue.pop()
            if self.val[x]:
                continue
            lx = self.live[x]
            if not lx:
                return False
            (w,) = lx
            if not self._assign(x, w, queue):
                return False
        return True

    def _undo(self, trail_mark: int, stack_mark: int) -> None:
        while len(self.stack) > stack_mark:
            v = self.stack.pop()
            w = self.val[v]
            for ci, coef in self.occ[v]:
                self.partial[ci] -= coef * w
                self.count[ci] += 1
            dom = self.wdom[v]
            for e in self.sides_of[v]:
                self.side_lo[e] -= w - dom[0]
                self.side_hi[e] -= w - dom[-1]
            self.val[v] = 0
        while len(self.trail) > trail_mark:
            x, w = self.trail.pop()
            self.live[x].add(w)

    def _solve(self, pos: int) -> bool:
        st = self.stats
        st.nodes += 1
        if st.nodes > self.budget.max_nodes or (
            st.nodes & 1023 == 0 and time.perf_counter() > self.deadline
        ):
            raise _BudgetExceeded
        order, val = self.order, self.val
        while pos < len(order) and val[order[pos]]:
            pos += 1
        if pos == len(order):
            return True
        v = order[pos]
        p, q = self.prev[v], self.next[v]
        lo = val[p] if p >= 0 else 0
        hi = val[q] if q >= 0 and val[q] else None
        for w in sorted(self.live[v]):
            if w < lo or (hi is not None and w > hi):
                continue
            tmark, smark = len(self.trail), len(self.stack)
            queue: list[int] = []
            if self._assign(v, w, queue) and self._propagate(queue) and self._solve(pos + 1):
                return True
            self._undo(tmark, smark)
        return False


def decide(inst: DecisionInstance, budget: Budget = DEFAULT_BUDGET) -> SolveResult:
    """Complete search for a labeling from the instance's domains.

    A ``sat`` result always carries a labeling that has been re-checked with
    the matching verifier.
    """
    res = _Search(inst, budget).run()
    if res.labeling is not None:
        g = inst.graph
        bad = verify_sum(g, res.labeling) if inst.mode == "sum" else verify_multiset(g, res.labeling)
        if bad is None and any(x not in d for x, d in zip(res.labeling, inst.domains)):
            bad = "label outside domain"
        if bad is not None:
            raise AssertionError(f"solver produced an invalid labeling: {bad}")
    return res


def decide_list(g: Graph, lists: ListAssignment, budget: Budget = DEFAULT_BUDGET) -> SolveResult:
    return decide(DecisionInstance.with_lists(g, lists, "sum"), budget)


@dataclass
class DisResult:
    """Outcome of a minimisation.

    ``value`` is exact when ``status == "exact"``; on budget exhaustion it is
    ``None`` and ``lower``/``upper`` bracket the optimum.
    """

    value: int | None
    witness: list[int] | None
    lower: int
    upper: int | None
    status: Literal["exact", "budget"]
    revaluation: list[int] | None = None
    stats: list[SolveStats] = field(default_factory=list)


def dis_ceiling(g: Graph) -> int:
    """Search ceiling for dis: ``maxdeg**2 - maxdeg + 1`` (1 when maxdeg <= 1)."""
    d = g.max_degree
    return 1 if d <= 1 else d * d - d + 1


def _minimise(g: Graph, mode: Mode, budget: Budget) -> DisResult:
    ceiling = dis_ceiling(g)
    if g.max_degree <= 1:
        ones = [1] * g.n
        return DisResult(1, ones, 1, 1, "exact", ones if mode == "multiset" else None)
    stats = []
    for k in range(1, ceiling + 1):
        res = decide(DecisionInstance.uniform(g, k, mode), budget)
        stats.append(res.stats)
        if res.status == "budget":
            return DisResult(None, None, k, ceiling, "budget", None, stats)
        if res.satisfiable:
            reval = strong_revaluation(g, res.labeling) if mode == "multiset" else None
            return DisResult(k, res.labeling, k, k, "exact", reval, stats)
    raise AssertionError(
        f"no labeling with values 1..{ceiling}: contradicts the maxdeg^2 - maxdeg + 1 ceiling"
    )


def compute_dis(g: Graph, budget: Budget = DEFAULT_BUDGET) -> DisResult:
    """Least k admitting a closed distinguishing labeling from ``{1..k}``."""
    return _minimise(g, "sum", budget)


def compute_dis_s(g: Graph, budget: Budget = DEFAULT_BUDGET) -> DisResult:
    """Least number of colours for a multiset-distinguishing colouring.

    The witness uses colours ``1..k``; ``revaluation`` maps them to powers of
    ``maxdeg + 2`` and is a sum-distinguishing labeling with ``k`` distinct values.
    """
    res = _minimise(g, "multiset", budget)
    if res.revaluation is not None:
        if verify_sum(g, res.revaluation) is not None:
            raise AssertionError("strong revaluation failed to verify")
    return res


# CNF offload

class CnfExportError(ValueError):
    def __init__(self, edge: tuple[int, int], size: int, limit: int):
        self.edge = edge
        super().__init__(
            f"edge {edge}: symmetric difference has {size} vertices, limit is {limit}"
        )


@dataclass(frozen=True)
class CnfExport:
    formula: CnfFormula
    varmap: tuple[tuple[int, int], ...]  # variable i+1 -> (vertex, value)

    def decode(self, model: dict[int, bool]) -> list[int]:
        n = 1 + max((v for v, _ in self.varmap), default=-1)
        labeling = [0] * n
        for i, (v, x) in enumerate(self.varmap, start=1):
            if model.get(i):
                labeling[v] = x
        return labeling


def export_cnf(inst: DecisionInstance, limit: int = 12) -> CnfExport:
    """One-hot CNF encoding of a sum-mode instance.

    Each constraint contributes one blocking clause per assignment of its
    symmetric difference that makes the two sides equal.
    """
    if inst.mode != "sum":
        raise ValueError("CNF export supports sum mode only")
    g = inst.graph
    varmap: list[tuple[int, int]] = []
    var: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        for x in inst.domains[v]:
            varmap.append((v, x))
            var[v, x] = len(varmap)
    clauses: list[tuple[int, ...]] = []
    for v in range(g.n):
        lits = [var[v, x] for x in inst.domains[v]]
        clauses.append(tuple(lits))
        for i in range(len(lits)):
            for j in range(i + 1, len(lits)):
                clauses.append((-lits[i], -lits[j]))
    for c in edge_constraints(g, "sum"):
        if len(c.scope) > limit:
            raise CnfExportError((c.u, c.v), len(c.scope), limit)
        members = [(a, 1) for a in c.plus] + [(b, -1) for b in c.minus]
        for combo in _zero_sum_assignments(members, inst.domains):
            clauses.append(tuple(-var[x, val] for x, val in combo))
    return CnfExport(CnfFormula(len(varmap), tuple(clauses)), tuple(varmap))


def _zero_sum_assignments(members: list[tuple[int, int]], domains: Sequence[Sequence[int]]):
    lo_rest = [0] * (len(members) + 1)
    hi_rest = [0] * (len(members) + 1)
    for i in range(len(members) - 1, -1, -1):
        x, coef = members[i]
        a, b = coef * min(domains[x]), coef * max(domains[x])
        lo_rest[i] = lo_rest[i + 1] + min(a, b)
        hi_rest[i] = hi_rest[i + 1] + max(a, b)
    chosen: list[tuple[int, int]] = []

    def rec(i: int, acc: int):
        if i == len(members):
            if acc == 0:
                yield list(chosen)
            return
        if not lo_rest[i] <= -acc <= hi_rest[i]:
            return
        x, coef = members[i]
        for val in domains[x]:
            chosen.append((x, val))
            yield from rec(i + 1, acc + coef * val)
            chosen.pop()

    yield from rec(0, 0)


def dump_varmap(export: CnfExport) -> str:
    return "".join(f"{i} {v} {x}\n" for i, (v, x) in enumerate(export.varmap, start=1))


def solve_via_cnf(inst: DecisionInstance, limit: int = 12) -> list[int] | None:
    """Decide through the CNF encoding and the bundled DPLL."""
    export = export_cnf(inst, limit)
    model = dpll(export.formula)
    return None if model is None else export.decode(model)
