"""Brute-force reference implementations used only by the tests.

Nothing here touches the package's neighbourhood or constraint code: closed
neighbourhoods come from networkx adjacency, and every decision is made by
enumerating all candidates.
"""
from __future__ import annotations

import itertools

import networkx as nx
import numpy as np


def closed_matrix(G: nx.Graph) -> np.ndarray:
    """0/1 matrix with ``M[u, v] = 1`` iff ``u`` lies in ``N[v]``."""
    n = G.number_of_nodes()
    M = np.eye(n, dtype=np.int64)
    for u, v in G.edges():
        M[u, v] = M[v, u] = 1
    return M


def _constrained(G: nx.Graph, M: np.ndarray) -> list[tuple[int, int]]:
    return [(u, v) for u, v in G.edges() if not np.array_equal(M[:, u], M[:, v])]


def _all_labelings(n: int, k: int) -> np.ndarray:
    return np.array(list(itertools.product(range(1, k + 1), repeat=n)), dtype=np.int64).reshape(-1, n)


def valid_mask(G: nx.Graph, k: int, mode: str = "sum") -> tuple[np.ndarray, np.ndarray]:
    """All labelings from ``{1..k}`` and a boolean mask of the valid ones."""
    n = G.number_of_nodes()
    M = closed_matrix(G)
    L = _all_labelings(n, k)
    edges = _constrained(G, M)
    ok = np.ones(len(L), dtype=bool)
    if mode == "sum":
        S = L @ M
        for u, v in edges:
            ok &= S[:, u] != S[:, v]
    elif mode == "multiset":
        if edges:
            differ = np.zeros((len(L), len(edges)), dtype=bool)
            for c in range(1, k + 1):
                C = (L == c).astype(np.int64) @ M
                for i, (u, v) in enumerate(edges):
                    differ[:, i] |= C[:, u] != C[:, v]
            ok = differ.all(axis=1)
    else:
        raise ValueError(mode)
    return L, ok


def brute_exists(G: nx.Graph, k: int, mode: str = "sum") -> bool:
    return bool(valid_mask(G, k, mode)[1].any())


def brute_min(G: nx.Graph, kmax: int = 3, mode: str = "sum") -> int | None:
    """Least ``k <= kmax`` with a valid labeling, or ``None`` if there is none."""
    return next((k for k in range(1, kmax + 1) if brute_exists(G, k, mode)), None)


def brute_forced_pairs(G: nx.Graph, k: int) -> set[tuple[int, int]] | None:
    """Pairs ``(a, b)`` with ``f(a) != f(b)`` in every valid labeling from ``{1..k}``.

    ``None`` when no valid labeling exists (every pair is vacuously forced).
    """
    L, ok = valid_mask(G, k)
    if not ok.any():
        return None
    V = L[ok]
    n = G.number_of_nodes()
    return {(a, b) for a in range(n) for b in range(a + 1, n) if (V[:, a] != V[:, b]).all()}


def brute_sat(clauses: list[list[int]]) -> bool:
    names = sorted({abs(x) for c in clauses for x in c})
    for bits in itertools.product((False, True), repeat=len(names)):
        val = dict(zip(names, bits))
        if all(any(val[abs(x)] == (x > 0) for x in c) for c in clauses):
            return True
    return False


def brute_nae(clauses: list[list[int]]) -> bool:
    names = sorted({abs(x) for c in clauses for x in c})
    for bits in itertools.product((False, True), repeat=len(names)):
        val = dict(zip(names, bits))
        if all(len({val[abs(x)] == (x > 0) for x in c}) == 2 for c in clauses):
            return True
    return False


def brute_colorable(n: int, edges: list[tuple[int, int]], t: int) -> bool:
    for c in itertools.product(range(t), repeat=n):
        if all(c[u] != c[v] for u, v in edges):
            return True
    return False


def brute_split(n: int, edges: list[tuple[int, int]]) -> bool:
    E = {frozenset(e) for e in edges}
    for mask in range(1 << n):
        K = [v for v in range(n) if mask >> v & 1]
        S = [v for v in range(n) if not mask >> v & 1]
        if all(frozenset((a, b)) in E for a, b in itertools.combinations(K, 2)) and not any(
            frozenset((a, b)) in E for a, b in itertools.combinations(S, 2)
        ):
            return True
    return False


def brute_clique_number(n: int, edges: list[tuple[int, int]]) -> int:
    E = {frozenset(e) for e in edges}
    best = 1 if n else 0
    for mask in range(1, 1 << n):
        K = [v for v in range(n) if mask >> v & 1]
        if len(K) > best and all(frozenset(p) in E for p in itertools.combinations(K, 2)):
            best = len(K)
    return best
