"""Labelings of split graphs.

Both procedures take the canonical partition ``(K, S)`` with ``K`` maximal, and
order ``S`` by vertex index.
"""
from __future__ import annotations

import random

from ..errors import Falsification
from ..graph import Graph, SplitPartition, split_partition
from ..labeling import verify_sum


def _partition(g: Graph) -> SplitPartition:
    part = split_partition(g)
    if part is None:
        raise ValueError("graph is not split")
    return part


def split_greedy_labeling(g: Graph) -> list[int]:
    """Label ``K`` with 1, then add ``S``-vertices one at a time with the least safe label.

    A label ``j`` is safe for the ``i``-th S-vertex if no two adjacent K-vertices
    with distinct closed neighbourhoods in ``G_i`` end up with equal sums. Only
    K-K edges can clash: a K-vertex sees all of ``K`` plus its S-neighbours,
    while an S-vertex misses at least one K-vertex. At most ``C(omega, 2)``
    labels are blocked, so some ``j <= omega**2`` is safe.
    """
    part = _partition(g)
    clique = sorted(part.clique)
    omega = len(clique)
    cap = max(1, omega * omega)
    f = [1] * g.n
    sums = {x: omega for x in clique}  # running closed sums in G_i
    seen: dict[int, set[int]] = {x: set() for x in clique}  # S-neighbours added so far
    for s in sorted(part.independent):
        nbrs = g.neighbors(s)
        for j in range(1, cap + 1):
            trial = {x: sums[x] + (j if x in nbrs else 0) for x in clique}
            ok = True
            for a in range(omega):
                xa = clique[a]
                for b in range(a + 1, omega):
                    xb = clique[b]
                    if trial[xa] != trial[xb]:
                        continue
                    na = seen[xa] | ({s} if xa in nbrs else set())
                    nb = seen[xb] | ({s} if xb in nbrs else set())
                    if na != nb:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                f[s] = j
                sums = trial
                for x in nbrs:
                    seen[x].add(s)
                break
        else:
            raise Falsification(f"no label in 1..{cap} is safe for S-vertex {s}")
    bad = verify_sum(g, f)
    if bad is not None:
        raise Falsification(f"greedy split labeling fails on the full graph: {bad}")
    return f


def split_strong_labeling(g: Graph, max_bits: int | None = None) -> list[int]:
    """``K`` gets 1 and the ``i``-th S-vertex gets ``(D+1)**(i-1)``.

    Python integers are unbounded; ``max_bits`` optionally caps the largest
    label's bit length.
    """
    part = _partition(g)
    base = g.max_degree + 1
    f = [1] * g.n
    for i, s in enumerate(sorted(part.independent)):
        f[s] = base**i
        if max_bits is not None and f[s].bit_length() > max_bits:
            raise OverflowError(f"label {base}**{i} exceeds {max_bits} bits")
    bad = verify_sum(g, f)
    if bad is not None:
        raise Falsification(f"power labeling fails on the full graph: {bad}")
    return f


def random_split_graph(omega: int, s_size: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Clique ``0..omega-1`` plus ``s_size`` independent vertices.

    Each S-vertex joins a random subset of the clique; subsets equal to the whole
    clique are redrawn so the clique stays maximal and ``omega`` is exact.
    """
    if omega < 1 or s_size < 0:
        raise ValueError("need omega >= 1 and a non-negative S size")
    edges = [(a, b) for a in range(omega) for b in range(a + 1, omega)]
    for s in range(omega, omega + s_size):
        while True:
            nbrs = [k for k in range(omega) if rng.random() < p]
            if len(nbrs) < omega:
                break
        edges += [(k, s) for k in nbrs]
    return Graph.from_edges(omega + s_size, edges)
