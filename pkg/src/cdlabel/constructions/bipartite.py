"""Two-value labeling of bipartite graphs."""
from __future__ import annotations

from ..graph import Graph, bipartition


def bipartite_two_value_labeling(g: Graph) -> list[int]:
    """``X -> 1``, ``Y -> D`` (``D`` the max degree; 2 if ``D <= 1``).

    For an edge ``xy`` the sums are ``1 + D*deg(x)`` and ``D + deg(y)``; they can
    only meet when both degrees are 1, which is a twin pair.
    """
    parts = bipartition(g)
    if parts is None:
        raise ValueError("graph is not bipartite")
    high = g.max_degree if g.max_degree > 1 else 2
    _, y_side = parts
    return [high if v in y_side else 1 for v in range(g.n)]
