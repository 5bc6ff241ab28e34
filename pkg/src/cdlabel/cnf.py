"""CNF formulas: DIMACS I/O and a small DPLL used as a bundled fallback solver."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, clauses: Iterable[Iterable[int]], num_vars: int | None = None) -> "CnfFormula":
        cl = tuple(tuple(c) for c in clauses)
        top = max((abs(x) for c in cl for x in c), default=0)
        if num_vars is None:
            num_vars = top
        elif top > num_vars:
            raise ValueError(f"literal {top} exceeds declared variable count {num_vars}")
        if any(x == 0 for c in cl for x in c):
            raise ValueError("literal 0 is not allowed inside a clause")
        return cls(num_vars, cl)

    @property
    def variables(self) -> list[int]:
        return sorted({abs(x) for c in self.clauses for x in c})

    def is_three_uniform(self) -> bool:
        return all(len(c) == 3 for c in self.clauses)

    def is_monotone(self) -> bool:
        return all(x > 0 for c in self.clauses for x in c)

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(x)] == (x > 0) for x in c) for c in self.clauses)

    def nae_satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(len({assignment[abs(x)] == (x > 0) for x in c}) == 2 for c in self.clauses)


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = num_clauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for i, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("c") or s.startswith("%"):
            continue
        if s.startswith("p"):
            parts = s.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {i}: malformed problem line")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise DimacsError(f"line {i}: clause before 'p cnf' header")
        try:
            lits = [int(t) for t in s.split()]
        except ValueError:
            raise DimacsError(f"line {i}: non-integer literal") from None
        for x in lits:
            if x == 0:
                clauses.append(current)
                current = []
            else:
                if abs(x) > num_vars:
                    raise DimacsError(f"line {i}: literal {x} out of range")
                current.append(x)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        clauses.append(current)
    if len(clauses) != num_clauses:
        raise DimacsError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(tuple(c) for c in clauses))


def dump_dimacs(phi: CnfFormula, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {phi.num_vars} {len(phi.clauses)}")
    lines.extend(" ".join(str(x) for x in c) + " 0" for c in phi.clauses)
    return "\n".join(lines) + "\n"


def dpll(phi: CnfFormula) -> dict[int, bool] | None:
    """Return a model (every variable ``1..num_vars`` assigned) or ``None`` if unsatisfiable.

    Plain DPLL with unit propagation; meant for the tiny formulas used to
    cross-check the labeling solver, not for hard instances.
    """
    clauses = [frozenset(c) for c in phi.clauses]
    model = _dpll(clauses, {})
    if model is None:
        return None
    return {v: model.get(v, False) for v in range(1, phi.num_vars + 1)}


def _dpll(clauses: list[frozenset[int]], assignment: dict[int, bool]) -> dict[int, bool] | None:
    assignment = dict(assignment)
    while True:
        if any(not c for c in clauses):
            return None
        if not clauses:
            return assignment
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        (lit,) = unit
        assignment[abs(lit)] = lit > 0
        clauses = _simplify(clauses, lit)
    shortest = min(clauses, key=len)
    lit = min(shortest, key=lambda x: (abs(x), -x))
    for choice in (lit, -lit):
        sub = _dpll(_simplify(clauses, choice), {**assignment, abs(choice): choice > 0})
        if sub is not None:
            return sub
    return None


def _simplify(clauses: list[frozenset[int]], lit: int) -> list[frozenset[int]]:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
        out.append(c)
    return out
