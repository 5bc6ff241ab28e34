"""Labelings, list assignments and the three closed-distinguishing verifiers.

A labeling is any sequence of positive ints indexed by vertex; a list
assignment is a sequence of non-empty sets of positive ints. Verifiers return
``None`` when the labeling is valid and a certificate object otherwise.
"""
from __future__ import annotations

import numbers
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .graph import Graph

Labeling = Sequence[int]
ListAssignment = Sequence[frozenset[int]]


@dataclass(frozen=True)
class Violation:
    """An edge whose endpoints have distinct closed neighborhoods but equal fingerprints."""

    u: int
    v: int
    value_u: object  # int sum, or sorted multiset tuple
    value_v: object
    mode: Literal["sum", "multiset"]

    def __str__(self) -> str:
        return f"{self.mode} violation at edge ({self.u}, {self.v}): {self.value_u} == {self.value_v}"


@dataclass(frozen=True)
class ListViolation:
    """A vertex whose label is not in its list."""

    vertex: int
    label: int
    allowed: frozenset[int]

    def __str__(self) -> str:
        return f"list violation at vertex {self.vertex}: {self.label} not in {sorted(self.allowed)}"


def check_labeling(g: Graph, f: Labeling) -> None:
    if len(f) != g.n:
        raise ValueError(f"labeling has {len(f)} entries, graph has {g.n} vertices")
    for v, x in enumerate(f):
        if not isinstance(x, numbers.Integral) or x < 1:
            raise ValueError(f"label of vertex {v} must be a positive integer, got {x!r}")


def check_lists(g: Graph, lists: ListAssignment) -> None:
    if len(lists) != g.n:
        raise ValueError(f"list assignment has {len(lists)} entries, graph has {g.n} vertices")
    for v, lv in enumerate(lists):
        if not lv:
            raise ValueError(f"list of vertex {v} is empty")
        if any(not isinstance(x, numbers.Integral) or x < 1 for x in lv):
            raise ValueError(f"list of vertex {v} must hold positive integers")


def uniform_size(lists: ListAssignment) -> int | None:
    """The common list size, or ``None`` if the sizes differ."""
    sizes = {len(lv) for lv in lists}
    return sizes.pop() if len(sizes) == 1 else None


def closed_sum(g: Graph, f: Labeling, v: int) -> int:
    return sum(f[u] for u in g.closed(v))


def closed_sums(g: Graph, f: Labeling) -> list[int]:
    return [sum(f[u] for u in g.closed(v)) for v in range(g.n)]


def constrained_edges(g: Graph) -> Iterable[tuple[int, int]]:
    """Edges ``(u, v)``, ``u < v``, with N[u] != N[v], in lexicographic order."""
    for u, v in g.edges():
        if g.closed(u) != g.closed(v):
            yield u, v


def verify_sum(g: Graph, f: Labeling) -> Violation | None:
    check_labeling(g, f)
    sums = closed_sums(g, f)
    for u, v in constrained_edges(g):
        if sums[u] == sums[v]:
            return Violation(u, v, sums[u], sums[v], "sum")
    return None


def verify_multiset(g: Graph, f: Labeling) -> Violation | None:
    check_labeling(g, f)
    bags = [tuple(sorted(f[u] for u in g.closed(v))) for v in range(g.n)]
    for u, v in constrained_edges(g):
        if bags[u] == bags[v]:
            return Violation(u, v, bags[u], bags[v], "multiset")
    return None


def verify_list(g: Graph, f: Labeling, lists: ListAssignment) -> Violation | ListViolation | None:
    """List membership is checked first, then the sum condition."""
    check_labeling(g, f)
    check_lists(g, lists)
    for v, x in enumerate(f):
        if x not in lists[v]:
            return ListViolation(v, x, frozenset(lists[v]))
    return verify_sum(g, f)


def distinct_value_count(f: Labeling) -> int:
    return len(set(f))


def multiset_encoding(f: Labeling, base: int) -> list[int]:
    """Re-value ``f`` injectively by ``x -> base**(rank(x))``.

    With ``base > max |N[v]|`` (``base = max_degree + 2`` suffices), two closed
    neighborhoods have equal encoded sums exactly when their label multisets
    agree, so a multiset-distinguishing labeling becomes a sum-distinguishing
    one with the same number of distinct values.
    """
    ranks = {x: i for i, x in enumerate(sorted(set(f)))}
    return [base ** ranks[x] for x in f]


def strong_revaluation(g: Graph, f: Labeling) -> list[int]:
    return multiset_encoding(f, g.max_degree + 2)


def multiset_fingerprints(g: Graph, f: Labeling) -> list[Counter]:
    return [Counter(f[u] for u in g.closed(v)) for v in range(g.n)]


# file formats

def load_labeling(text: str) -> list[int]:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            x = int(s)
        except ValueError:
            raise ValueError(f"line {i}: expected one integer, got {s!r}") from None
        if x < 1:
            raise ValueError(f"line {i}: labels must be positive")
        out.append(x)
    return out


def dump_labeling(f: Labeling) -> str:
    return "".join(f"{x}\n" for x in f)


def load_lists(text: str) -> list[frozenset[int]]:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s.startswith("#"):
            continue
        if not s:
            continue
        try:
            vals = frozenset(int(t) for t in s.split())
        except ValueError:
            raise ValueError(f"line {i}: non-integer list entry") from None
        if any(x < 1 for x in vals):
            raise ValueError(f"line {i}: list entries must be positive")
        out.append(vals)
    return out


def dump_lists(lists: ListAssignment) -> str:
    return "".join(" ".join(str(x) for x in sorted(lv)) + "\n" for lv in lists)
