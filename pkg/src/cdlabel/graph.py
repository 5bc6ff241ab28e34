"""Immutable simple graphs and the structural queries the rest of the package needs.

Vertices are dense integers ``0..n-1``. Adjacency is stored as sorted tuples so
closed-neighborhood comparisons are cheap merges.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed or describes a non-simple graph."""

    def __init__(self, line: int | None, reason: str):
        self.line = line
        self.reason = reason
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + reason)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable once built; use :meth:`from_edges` or :func:`load_graph`.
    """

    __slots__ = ("n", "m", "adj", "_adjsets", "_closed")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        adj = tuple(tuple(sorted(set(nb))) for nb in adjacency)
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows, expected {n}")
        adjsets = tuple(frozenset(nb) for nb in adj)
        for v, nb in enumerate(adj):
            if v in adjsets[v]:
                raise GraphFormatError(None, f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < n:
                    raise GraphFormatError(None, f"endpoint {u} out of range")
                if v not in adjsets[u]:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        self.n = n
        self.adj = adj
        self._adjsets = adjsets
        self.m = sum(len(nb) for nb in adj) // 2
        self._closed = tuple(frozenset(nb) | {v} for v, nb in enumerate(adjsets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(None, f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(None, f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise GraphFormatError(None, f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, nbrs)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def closed(self, v: int) -> frozenset[int]:
        """N[v] as a frozenset."""
        return self._closed[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if u < v:
                    yield u, v

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, renumbered in ascending order; also returns the old ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [[index[u] for u in self.adj[v] if u in index] for v in keep]
        return Graph(len(keep), rows), keep

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for v, nb in enumerate(self.adj):
            rows[perm[v]] = [perm[u] for u in nb]
        return Graph(self.n, rows)


def load_graph(text: str | bytes) -> Graph:
    """Parse the line-based graph format.

    Blank lines and lines starting with ``#`` are ignored. The first remaining
    line is ``n m``, followed by exactly ``m`` lines ``u v``.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = [
        (i, line.split())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphFormatError(None, "missing header line 'n m'")
    hline, header = rows[0]
    n, m = _ints(header, hline, 2)
    if n < 0 or m < 0:
        raise GraphFormatError(hline, "negative count in header")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(hline, f"header declares {m} edges, found {len(body)}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for line, toks in body:
        u, v = _ints(toks, line, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(line, f"endpoint out of range [0, {n})")
        if u == v:
            raise GraphFormatError(line, f"self-loop at {u}")
        if v in nbrs[u]:
            raise GraphFormatError(line, f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, nbrs)


def dump_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _ints(toks: list[str], line: int, count: int) -> list[int]:
    if len(toks) != count:
        raise GraphFormatError(line, f"expected {count} integers, got {len(toks)} fields")
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise GraphFormatError(line, "non-integer field") from None


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """Sorted members of N[v]."""
    return tuple(sorted(g.closed(v)))


def same_closed_neighborhood(g: Graph, u: int, v: int) -> bool:
    return g.closed(u) == g.closed(v)


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]  # non-increasing

    @property
    def max(self) -> int:
        return self.degrees[0] if self.degrees else 0

    @property
    def min(self) -> int:
        return self.degrees[-1] if self.degrees else 0


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees(), reverse=True)))


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-colour ``g`` by BFS; the lowest vertex of every component goes to X."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = [root]
        for v in queue:
            for u in g.adj[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    x = frozenset(v for v in range(g.n) if side[v] == 0)
    return x, frozenset(range(g.n)) - x


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]


def split_partition(g: Graph) -> SplitPartition | None:
    """Canonical (clique-maximal) split partition, or ``None`` if ``g`` is not split.

    Uses the Hammer-Simeone degree-sequence test: with vertices sorted by
    non-increasing degree (ties by index) and ``k = max{i : d_i >= i-1}``,
    ``g`` is split iff ``sum(d_1..d_k) = k(k-1) + sum(d_{k+1}..d_n)``, and then the
    first ``k`` vertices form a clique.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    k = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    if sum(d[:k]) != k * (k - 1) + sum(d[k:]):
        return None
    clique = set(order[:k])
    indep = set(order[k:])
    # at most one S-vertex can be complete to K, since S is independent
    changed = True
    while changed:
        changed = False
        for s in sorted(indep):
            if clique <= g.neighbors(s):
                indep.discard(s)
                clique.add(s)
                changed = True
                break
    return SplitPartition(frozenset(clique), frozenset(indep))


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int


def srg_params(g: Graph) -> SrgParams | None:
    """Strongly-regular parameters ``(n, k, lambda, mu)``.

    Complete and edgeless graphs are rejected, since one of the two pair
    classes is empty and the corresponding parameter is undefined.
    """
    if g.n < 2:
        return None
    k = g.degree(0)
    if any(g.degree(v) != k for v in range(g.n)):
        return None
    if g.m == 0 or g.m == g.n * (g.n - 1) // 2:
        return None
    lam = mu = None
    for u, v in combinations(range(g.n), 2):
        common = len(g.neighbors(u) & g.neighbors(v))
        if g.has_edge(u, v):
            if lam is None:
                lam = common
            elif lam != common:
                return None
        else:
            if mu is None:
                mu = common
            elif mu != common:
                return None
    return SrgParams(g.n, k, lam, mu)


def clique_number(g: Graph) -> int:
    """Exact clique number by simple branch and bound (small graphs)."""
    best = 0

    def expand(size: int, cand: set[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + len(cand) <= best:
            return
        for v in sorted(cand):
            if size + len(cand) <= best:
                return
            cand = cand - {v}
            expand(size + 1, cand & g.neighbors(v))

    expand(0, set(range(g.n)))
    return best


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return not any(g.has_edge(a, b) for a, b in combinations(vs, 2))


# small named graphs used throughout tests and demos

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
