from __future__ import annotations

import functools

import networkx as nx
import pytest

from cdlabel.graph import Graph


def to_graph(G: nx.Graph) -> Graph:
    G = nx.convert_node_labels_to_integers(G)
    return Graph.from_edges(G.number_of_nodes(), G.edges())


@functools.cache
def census() -> tuple[tuple[nx.Graph, Graph], ...]:
    """Every connected graph on 1..7 vertices, one per isomorphism class (networkx atlas)."""
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if nx.is_connected(G):
            out.append((G, to_graph(G)))
    return tuple(out)


@functools.cache
def trees(max_n: int = 9) -> tuple[Graph, ...]:
    out = [Graph(1, [[]])]  # networkx rejects n=1
    for n in range(2, max_n + 1):
        out.extend(to_graph(T) for T in nx.nonisomorphic_trees(n))
    return tuple(out)


@pytest.fixture(scope="session")
def atlas():
    return census()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
