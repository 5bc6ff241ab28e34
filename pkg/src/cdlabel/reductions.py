"""Gadget compilers for three hardness reductions, with witness maps both ways.

* ``reduce_planar_3sat``: 3SAT formula -> subcubic graph with dis = 2 iff satisfiable.
* ``reduce_monotone_nae``: monotone 3-uniform formula -> bipartite subcubic graph
  with dis = 2 iff NAE-satisfiable.
* ``reduce_t_colorability``: graph ``G`` and ``t >= 3`` -> graph with a
  distinguishing labeling from ``1..t`` iff ``G`` is t-colourable.

Attachment sites on variable cycles are consumed in ascending cycle-index
order, so identical inputs give identical graphs and role maps.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .cnf import CnfFormula
from .errors import Falsification
from .graph import Graph, bipartition
from .labeling import Labeling, verify_sum

Kind = Literal["planar3sat", "nae", "tcolor"]
Assignment = dict[int, bool]


@dataclass
class ReductionOutput:
    kind: Kind
    graph: Graph
    roles: list[str]
    params: dict[str, int]
    source: CnfFormula | Graph
    cycles: dict[int, list[int]] = field(default_factory=dict)  # variable -> v_1..v_L
    colour: dict[int, str] = field(default_factory=dict)  # cycle vertex -> red/blue/black/white
    attachments: list[tuple[int, str, int]] = field(default_factory=list)  # (clause, gadget role, cycle vertex)

    def __post_init__(self) -> None:
        self.index = {r: v for v, r in enumerate(self.roles)}
        if len(self.index) != len(self.roles):
            raise AssertionError("role names must be unique")

    def vertex(self, role: str) -> int:
        return self.index[role]


class _Builder:
    def __init__(self) -> None:
        self.roles: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, role: str) -> int:
        self.roles.append(role)
        return len(self.roles) - 1

    def join(self, a: int, b: int) -> None:
        self.edges.append((a, b))

    def degrees(self) -> list[int]:
        deg = [0] * len(self.roles)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.roles), self.edges)


def _need_clauses(phi: CnfFormula) -> None:
    if not phi.clauses:
        raise ValueError("formula has no clauses")
    bad = next((c for c in phi.clauses if len(c) != 3), None)
    if bad is not None:
        raise ValueError(f"clause {list(bad)} does not have exactly 3 literals")


def _need_assignment(phi: CnfFormula, gamma: Assignment) -> None:
    missing = [x for x in range(1, phi.num_vars + 1) if x not in gamma]
    if missing:
        raise ValueError(f"assignment misses variables {missing}")


def _literal(gamma: Assignment, lit: int) -> bool:
    return gamma[abs(lit)] == (lit > 0)


def _two_valued_and_valid(g: Graph, f: Labeling) -> None:
    if len(f) != g.n:
        raise ValueError("labeling length does not match the graph")
    if any(x not in (1, 2) for x in f):
        raise ValueError("labeling must use values 1 and 2 only")
    bad = verify_sum(g, f)
    if bad is not None:
        raise ValueError(f"labeling is not distinguishing: {bad}")


# ---------------------------------------------------------------- planar 3SAT


def _planar_colour(i: int, gamma_count: int) -> str:
    first_half = i <= 12 * gamma_count
    if i % 6 == 1:
        return "red" if first_half else "black"
    if i % 6 == 4:
        return "black" if first_half else "blue"
    return "white"


def reduce_planar_3sat(phi: CnfFormula) -> ReductionOutput:
    """Cycle ``C_{24g}`` per variable, a ``P_8`` clause path with pendants on ``u_3, u_6``.

    ``u_1`` attaches to the cycles of the first two literals, ``u_4`` and
    ``u_8`` to two distinct sites on the third literal's cycle. Positive
    literals use red sites, negative ones blue sites. Each cycle has ``2g``
    red and ``2g`` blue sites; formulas needing more are rejected.
    """
    _need_clauses(phi)
    gam = len(phi.clauses)
    length = 24 * gam
    need: dict[tuple[int, bool], int] = {}
    for c in phi.clauses:
        for pos, lit in enumerate(c):
            key = (abs(lit), lit > 0)
            need[key] = need.get(key, 0) + (2 if pos == 2 else 1)
    for (x, positive), cnt in sorted(need.items()):
        if cnt > 2 * gam:
            kind = "red" if positive else "blue"
            raise ValueError(f"variable {x} needs {cnt} {kind} sites but its cycle has {2 * gam}")

    b = _Builder()
    cycles: dict[int, list[int]] = {}
    colour: dict[int, str] = {}
    for x in range(1, phi.num_vars + 1):
        ring = []
        for i in range(1, length + 1):
            col = _planar_colour(i, gam)
            v = b.add(f"C{x}.v{i}.{col}")
            colour[v] = col
            ring.append(v)
        for i in range(length):
            b.join(ring[i], ring[(i + 1) % length])
        cycles[x] = ring
    free = {
        (x, pol): [v for v in cycles[x] if colour[v] == ("red" if pol else "blue")]
        for x in cycles
        for pol in (True, False)
    }
    attachments = []
    for ci, (la, lb, lw) in enumerate(phi.clauses, start=1):
        u = {k: b.add(f"P{ci}.u{k}") for k in range(1, 9)}
        for k in range(1, 8):
            b.join(u[k], u[k + 1])
        p1, p2 = b.add(f"P{ci}.u'"), b.add(f"P{ci}.u''")
        b.join(u[3], p1)
        b.join(u[6], p2)
        for lit, anchor in ((la, 1), (lb, 1), (lw, 4), (lw, 8)):
            site = free[abs(lit), lit > 0].pop(0)
            b.join(u[anchor], site)
            attachments.append((ci, f"u{anchor}", site))
    deg = b.degrees()
    for x, ring in cycles.items():
        for i, v in enumerate(ring, start=1):
            col = colour[v]
            if col == "black" or (col in ("red", "blue") and deg[v] == 2):
                b.join(v, b.add(f"C{x}.v{i}'"))
    g = b.graph()
    for v, col in colour.items():
        if col != "white" and g.degree(v) != 3:
            raise AssertionError(f"{b.roles[v]} has degree {g.degree(v)}, expected 3")
    if g.max_degree > 3:
        raise AssertionError("output is not subcubic")
    params = {"gamma": gam, "cycle_length": length, "variables": phi.num_vars}
    return ReductionOutput("planar3sat", g, b.roles, params, phi, cycles, colour, attachments)


def map_assignment_to_labeling_t2(out: ReductionOutput, gamma: Assignment) -> list[int]:
    phi = out.source
    assert isinstance(phi, CnfFormula) and out.kind == "planar3sat"
    _need_assignment(phi, gamma)
    half = 12 * out.params["gamma"]
    f = [2] * out.graph.n
    for x, ring in out.cycles.items():
        val = gamma[x]
        for i, v in enumerate(ring, start=1):
            col = out.colour[v]
            if col == "red":
                f[v] = 2 if val else 1
            elif col == "blue":
                f[v] = 1 if val else 2
            elif col == "black":
                f[v] = (1 if i <= half else 2) if val else (2 if i <= half else 1)
    for ci, clause in enumerate(phi.clauses, start=1):
        twos = {"u''"} if _literal(gamma, clause[2]) else {"u3", "u6", "u'", "u''"}
        for name in [f"u{k}" for k in range(1, 9)] + ["u'", "u''"]:
            f[out.vertex(f"P{ci}.{name}")] = 2 if name in twos else 1
    return f


def _cycle_assignment(out: ReductionOutput, f: Labeling) -> Assignment:
    gamma = {}
    for x, ring in out.cycles.items():
        reds = {f[v] for v in ring if out.colour[v] == "red"}
        blues = {f[v] for v in ring if out.colour[v] == "blue"}
        if len(reds) != 1 or len(blues) != 1 or reds == blues:
            raise Falsification(f"cycle of variable {x}: red labels {reds}, blue labels {blues}")
        gamma[x] = reds == {2}
    return gamma


def map_labeling_to_assignment_t2(out: ReductionOutput, f: Labeling) -> Assignment:
    phi = out.source
    assert isinstance(phi, CnfFormula) and out.kind == "planar3sat"
    _two_valued_and_valid(out.graph, f)
    gamma = _cycle_assignment(out, f)
    if not phi.satisfied_by(gamma):
        raise Falsification("extracted assignment does not satisfy the formula")
    return gamma


# ---------------------------------------------------------------- monotone NAE


def reduce_monotone_nae(phi: CnfFormula) -> ReductionOutput:
    """Cycle ``C_{12g}`` per variable (red at ``i = 1 mod 6``, blue at ``4 mod 6``).

    Per clause ``(x, y, z)`` two 5-paths ``c^1`` and ``c^2`` with a pendant on
    each middle vertex. ``c_1^1`` joins red sites of ``x`` and ``y`` and
    ``c_5^1`` a red site of ``z``; the second path does the same on blue sites.
    """
    _need_clauses(phi)
    if not phi.is_monotone():
        raise ValueError("formula contains a negated literal")
    gam = len(phi.clauses)
    length = 12 * gam
    need: dict[int, int] = {}
    for c in phi.clauses:
        for lit in c:
            need[lit] = need.get(lit, 0) + 1
    for x, cnt in sorted(need.items()):
        if cnt > 2 * gam:
            raise ValueError(f"variable {x} occurs {cnt} times but its cycle has {2 * gam} red sites")

    b = _Builder()
    cycles: dict[int, list[int]] = {}
    colour: dict[int, str] = {}
    for x in range(1, phi.num_vars + 1):
        ring = []
        for i in range(1, length + 1):
            col = "red" if i % 6 == 1 else "blue" if i % 6 == 4 else "white"
            v = b.add(f"C{x}.v{i}.{col}")
            colour[v] = col
            ring.append(v)
        for i in range(length):
            b.join(ring[i], ring[(i + 1) % length])
        cycles[x] = ring
    free = {(x, col): [v for v in cycles[x] if colour[v] == col] for x in cycles for col in ("red", "blue")}
    attachments = []
    for ci, (lx, ly, lz) in enumerate(phi.clauses, start=1):
        for side, col in ((1, "red"), (2, "blue")):
            c = {k: b.add(f"P{ci}.c{side}_{k}") for k in range(1, 6)}
            for k in range(1, 5):
                b.join(c[k], c[k + 1])
            b.join(c[3], b.add(f"P{ci}.c{side}'"))
            for lit, anchor in ((lx, 1), (ly, 1), (lz, 5)):
                site = free[lit, col].pop(0)
                b.join(c[anchor], site)
                attachments.append((ci, f"c{side}_{anchor}", site))
    deg = b.degrees()
    for x, ring in cycles.items():
        for i, v in enumerate(ring, start=1):
            if colour[v] != "white" and deg[v] == 2:
                b.join(v, b.add(f"C{x}.v{i}'"))
    g = b.graph()
    if g.max_degree > 3:
        raise AssertionError("output is not subcubic")
    if bipartition(g) is None:
        raise AssertionError("output is not bipartite")
    params = {"gamma": gam, "cycle_length": length, "variables": phi.num_vars}
    return ReductionOutput("nae", g, b.roles, params, phi, cycles, colour, attachments)


def map_assignment_to_labeling_t3(out: ReductionOutput, gamma: Assignment) -> list[int]:
    """Cycles follow ``gamma``; path vertices other than ``c_3`` get 1.

    The middle vertices are set by the third variable ``z``: true gives
    ``c_3^1 = 1, c_3^2 = 2`` and false the reverse. The edge ``c_4 c_5`` forces
    ``c_3`` to differ from the site label on ``z``'s cycle, which fixes this
    orientation.
    """
    phi = out.source
    assert isinstance(phi, CnfFormula) and out.kind == "nae"
    _need_assignment(phi, gamma)
    f = [2] * out.graph.n
    for x, ring in out.cycles.items():
        for v in ring:
            col = out.colour[v]
            if col == "red":
                f[v] = 2 if gamma[x] else 1
            elif col == "blue":
                f[v] = 1 if gamma[x] else 2
    for ci, clause in enumerate(phi.clauses, start=1):
        for side in (1, 2):
            for k in (1, 2, 4, 5):
                f[out.vertex(f"P{ci}.c{side}_{k}")] = 1
        z_true = gamma[clause[2]]
        f[out.vertex(f"P{ci}.c1_3")] = 1 if z_true else 2
        f[out.vertex(f"P{ci}.c2_3")] = 2 if z_true else 1
    return f


def map_labeling_to_assignment_t3(out: ReductionOutput, f: Labeling) -> Assignment:
    phi = out.source
    assert isinstance(phi, CnfFormula) and out.kind == "nae"
    _two_valued_and_valid(out.graph, f)
    gamma = _cycle_assignment(out, f)
    if not phi.nae_satisfied_by(gamma):
        raise Falsification("extracted assignment is not NAE-satisfying")
    return gamma


# ---------------------------------------------------------------- t-colourability


def reduce_t_colorability(g: Graph, t: int) -> ReductionOutput:
    """Pad ``G`` to degree ``D+1`` with pendants ``u_j^v`` and ``z^v``, then add a
    ``K_alpha`` block whose first ``alpha-1`` vertices carry ``n'+1`` pendants and
    whose last vertex sees every ``v`` and ``u_j^v``.
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    delta = g.max_degree
    b = _Builder()
    for v in range(g.n):
        b.add(f"v{v}")
    b.edges.extend(g.edges())
    pads: dict[int, list[int]] = {}
    for v in range(g.n):
        pads[v] = [b.add(f"u{j}^{v}") for j in range(1, delta - g.degree(v) + 1)]
        z = b.add(f"z^{v}")
        for w in pads[v] + [z]:
            b.join(v, w)
    n_prime = len(b.roles) - g.n
    alpha = (n_prime + 1) * (t - 1) + 2
    xs = [b.add(f"x{i}") for i in range(1, alpha + 1)]
    for i in range(alpha):
        for j in range(i + 1, alpha):
            b.join(xs[i], xs[j])
    for i in range(1, alpha):
        for r in range(1, n_prime + 2):
            b.join(xs[i - 1], b.add(f"x{i}.p{r}"))
    for v in range(g.n):
        for w in [v] + pads[v]:
            b.join(xs[-1], w)
    out_g = b.graph()
    for i in range(alpha - 1):
        assert out_g.degree(xs[i]) == alpha + n_prime, "x_i degree mismatch"
    assert out_g.degree(xs[-1]) == alpha + n_prime - 1, "x_alpha degree mismatch"
    params = {"t": t, "n": g.n, "n_prime": n_prime, "alpha": alpha, "max_degree": delta}
    return ReductionOutput("tcolor", out_g, b.roles, params, g)


def fan_values(size: int, target: int, t: int) -> list[int]:
    """``size`` labels in ``1..t`` summing to ``target``: a run of ``t``'s, one residual, then 1's."""
    extra = target - size
    if not 0 <= extra <= size * (t - 1):
        raise ValueError(f"target {target} unreachable with {size} labels in 1..{t}")
    full, rest = divmod(extra, t - 1)
    vals = [t] * full
    if rest:
        vals.append(1 + rest)
    return vals + [1] * (size - len(vals))


def _check_coloring(g: Graph, c, t: int) -> None:
    if len(c) != g.n:
        raise ValueError("colouring length does not match the graph")
    if any(not 1 <= x <= t for x in c):
        raise ValueError(f"colours must lie in 1..{t}")
    bad = next(((u, v) for u, v in g.edges() if c[u] == c[v]), None)
    if bad is not None:
        raise ValueError(f"colouring is improper on edge {bad}")


def map_coloring_to_labeling_nt2(out: ReductionOutput, c) -> list[int]:
    g = out.source
    assert isinstance(g, Graph) and out.kind == "tcolor"
    t, n_prime, alpha = out.params["t"], out.params["n_prime"], out.params["alpha"]
    _check_coloring(g, c, t)
    targets = list(range(n_prime + 1, (n_prime + 1) * t + 1))
    assert len(targets) == alpha - 1, "fan targets do not match the block size"
    f = [1] * out.graph.n
    for v in range(g.n):
        f[out.vertex(f"z^{v}")] = c[v]
    for i in range(1, alpha + 1):
        f[out.vertex(f"x{i}")] = t
    for i, target in enumerate(targets, start=1):
        vals = fan_values(n_prime + 1, target, t)
        for r, val in enumerate(vals, start=1):
            f[out.vertex(f"x{i}.p{r}")] = val
    return f


def map_labeling_to_coloring_nt2(out: ReductionOutput, f: Labeling) -> list[int]:
    g = out.source
    assert isinstance(g, Graph) and out.kind == "tcolor"
    t = out.params["t"]
    if len(f) != out.graph.n:
        raise ValueError("labeling length does not match the graph")
    if any(not 1 <= x <= t for x in f):
        raise ValueError(f"labels must lie in 1..{t}")
    bad = verify_sum(out.graph, f)
    if bad is not None:
        raise ValueError(f"labeling is not distinguishing: {bad}")
    c = [f[out.vertex(f"z^{v}")] for v in range(g.n)]
    clash = next(((u, v) for u, v in g.edges() if c[u] == c[v]), None)
    if clash is not None:
        raise Falsification(f"extracted colouring is improper on edge {clash}")
    return c


# ---------------------------------------------------------------- dispatch

WITNESS_MAPS = {
    "planar3sat": (map_assignment_to_labeling_t2, map_labeling_to_assignment_t2),
    "nae": (map_assignment_to_labeling_t3, map_labeling_to_assignment_t3),
    "tcolor": (map_coloring_to_labeling_nt2, map_labeling_to_coloring_nt2),
}
