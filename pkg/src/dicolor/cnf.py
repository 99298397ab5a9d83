"""Minimal complete CNF satisfiability engine plus DIMACS import/export.

The solver is a chronological-backtracking search with unit propagation and
a fixed deterministic branching rule: lowest-index unassigned variable,
tried true first.  Determinism is part of the contract - two runs on the
same formula yield identical results.  Instance sizes in this project are
modest, so there is no clause learning and no watched-literal machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class CnfFormula:
    """CNF formula over variables 1..var_count, clauses as signed literals.

    Tautological clauses are dropped at insertion and duplicate literals
    within a clause are removed.  An empty clause list is trivially
    satisfiable; an inserted empty clause makes the formula unsatisfiable.
    """

    def __init__(self, var_count: int = 0):
        if var_count < 0:
            raise ValueError(f"variable count must be >= 0, got {var_count}")
        self.var_count = var_count
        self.clauses: list[list[int]] = []

    def add_clause(self, literals: Iterable[int]) -> "CnfFormula":
        """Append one clause; grows var_count to cover its literals."""
        clause: list[int] = []
        seen: set[int] = set()
        for lit in literals:
            lit = int(lit)
            if lit == 0:
                raise ValueError("literal 0 is not allowed in a clause")
            if -lit in seen:
                return self  # tautology, dropped
            if lit not in seen:
                seen.add(lit)
                clause.append(lit)
        self.var_count = max(self.var_count, max((abs(l) for l in clause), default=0))
        self.clauses.append(clause)
        return self

    def copy(self) -> "CnfFormula":
        dup = CnfFormula(self.var_count)
        dup.clauses = [list(c) for c in self.clauses]
        return dup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CnfFormula):
            return NotImplemented
        return self.var_count == other.var_count and self.clauses == other.clauses

    def __repr__(self) -> str:
        return f"CnfFormula(vars={self.var_count}, clauses={len(self.clauses)})"


@dataclass(frozen=True)
class SatResult:
    """SAT with a total assignment (variable -> bool), or UNSAT."""

    satisfiable: bool
    assignment: Optional[dict[int, bool]] = None

    def value(self, var: int) -> bool:
        assert self.assignment is not None
        return self.assignment[var]


def _satisfies(formula: CnfFormula, assignment: dict[int, bool]) -> bool:
    return all(
        any(assignment[abs(l)] == (l > 0) for l in clause)
        for clause in formula.clauses
    )


def solve(formula: CnfFormula) -> SatResult:
    """Complete satisfiability decision with a verified witness on SAT.

    Chronological backtracking over the fixed order 1..var_count with unit
    propagation; every variable is assigned before SAT is declared, so the
    returned assignment is total.
    """
    nvars = formula.var_count
    clauses = formula.clauses
    for clause in clauses:
        if not clause:
            return SatResult(False)

    # occurrence lists: clauses indexed by each literal they contain
    occur: dict[int, list[int]] = {}
    for idx, clause in enumerate(clauses):
        for lit in clause:
            occur.setdefault(lit, []).append(idx)

    value: list[Optional[bool]] = [None] * (nvars + 1)
    trail: list[int] = []  # assigned literals, in order
    # decision stack entries: (trail length before the decision, literal, tried_other)
    decisions: list[tuple[int, int, bool]] = []

    def assign(lit: int) -> None:
        value[abs(lit)] = lit > 0
        trail.append(lit)

    def propagate(start: int) -> Optional[int]:
        """Unit-propagate from trail position start; return a conflicting
        clause index or None."""
        pos = start
        while pos < len(trail):
            falsified = -trail[pos]
            pos += 1
            for idx in occur.get(falsified, ()):
                unassigned: Optional[int] = None
                satisfied = False
                for lit in clauses[idx]:
                    v = value[abs(lit)]
                    if v is None:
                        if unassigned is None:
                            unassigned = lit
                        else:
                            unassigned = 0  # two or more free literals
                            break
                    elif v == (lit > 0):
                        satisfied = True
                        break
                if satisfied or unassigned == 0:
                    continue
                if unassigned is None:
                    return idx
                assign(unassigned)
        return None

    # top-level units
    for clause in clauses:
        if len(clause) == 1:
            lit = clause[0]
            v = value[abs(lit)]
            if v is None:
                assign(lit)
            elif v != (lit > 0):
                return SatResult(False)
    if propagate(0) is not None:
        return SatResult(False)

    next_var = 1
    while True:
        while next_var <= nvars and value[next_var] is not None:
            next_var += 1
        if next_var > nvars:
            assignment = {v: bool(value[v]) for v in range(1, nvars + 1)}
            assert _satisfies(formula, assignment), "internal: bad SAT witness"
            return SatResult(True, assignment)

        decisions.append((len(trail), next_var, False))
        assign(next_var)  # branch true first
        while True:
            conflict = propagate(len(trail) - 1)
            if conflict is None:
                break
            # backtrack chronologically to the deepest untried branch
            while decisions and decisions[-1][2]:
                mark, lit, _ = decisions.pop()
                while len(trail) > mark:
                    value[abs(trail.pop())] = None
            if not decisions:
                return SatResult(False)
            mark, lit, _ = decisions.pop()
            while len(trail) > mark:
                value[abs(trail.pop())] = None
            decisions.append((mark, -lit, True))
            assign(-lit)
        next_var = 1  # backtracking may have freed lower-index variables


def export_dimacs(formula: CnfFormula) -> str:
    """Standard DIMACS CNF text; byte-stable for identical formulas."""
    lines = [f"p cnf {formula.var_count} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(l) for l in clause + [0]))
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF; rejects malformed input rather than repairing it."""
    header: Optional[tuple[int, int]] = None
    clauses: list[list[int]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            header = (int(parts[2]), int(parts[3]))
            continue
        for token in line.split():
            lit = int(token)
            if lit == 0:
                clauses.append(pending)
                pending = []
            else:
                pending.append(lit)
    if header is None:
        raise ValueError("missing DIMACS header")
    if pending:
        raise ValueError("unterminated clause at end of file")
    nvars, nclauses = header
    if len(clauses) != nclauses:
        raise ValueError(f"header declares {nclauses} clauses, found {len(clauses)}")
    formula = CnfFormula(nvars)
    for clause in clauses:
        if any(abs(l) > nvars for l in clause):
            raise ValueError("literal exceeds declared variable count")
        formula.add_clause(clause)
    return formula


def pigeonhole(pigeons: int, holes: int) -> CnfFormula:
    """One-hot pigeonhole formula: UNSAT whenever pigeons > holes."""
    formula = CnfFormula(pigeons * holes)

    def var(p: int, h: int) -> int:
        return p * holes + h + 1

    for p in range(pigeons):
        formula.add_clause([var(p, h) for h in range(holes)])
    for h in range(holes):
        for p1 in range(pigeons):
            for p2 in range(p1 + 1, pigeons):
                formula.add_clause([-var(p1, h), -var(p2, h)])
    return formula
