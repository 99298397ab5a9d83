"""Exact decision procedures for dicoloring and hypergraph 2-coloring.

Two independent routes decide k-dicolorability: exhaustive backtracking
(`dicolorable_brute`) and counterexample-guided abstraction refinement over
the CNF engine (`dicolorable_cegar`).  They must always agree; the test
suite cross-validates them on large seeded corpora.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cnf import CnfFormula, solve
from .core import (
    Coloring,
    Digraph,
    Hypergraph3,
    find_monochromatic_cycle,
    is_acyclic,
    verify_dicoloring,
    verify_hypercoloring,
)

DEFAULT_ITERATION_CAP = 100_000


@dataclass(frozen=True)
class SolveStats:
    """nodes: assignments tried by brute search; iterations: SAT calls made
    by CEGAR; clauses_added: lazy cycle constraints accumulated."""

    nodes: int = 0
    iterations: int = 0
    clauses_added: int = 0


@dataclass(frozen=True)
class SolveOutcome:
    """Colorable with a verified witness, or not colorable; plus statistics."""

    colorable: bool
    witness: Optional[Coloring]
    stats: SolveStats = field(default_factory=SolveStats)


@dataclass(frozen=True)
class SolveConfig:
    method: str = "brute"  # brute | cegar
    k: int = 2
    node_cap: Optional[int] = None
    iteration_cap: int = DEFAULT_ITERATION_CAP

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"color count must be >= 1, got {self.k}")
        if self.method not in ("brute", "cegar"):
            raise ValueError(f"unknown method {self.method!r}")


class ResourceCapError(RuntimeError):
    """A configured node or iteration cap was exceeded; carries the partial
    statistics accumulated up to that point."""

    def __init__(self, message: str, stats: SolveStats):
        super().__init__(message)
        self.stats = stats


def _closes_cycle(succ, colors: list[int], v: int) -> bool:
    """Does assigning colors[v] close a monochromatic cycle through v?

    Vertices are colored in index order, so before this assignment every
    color class was acyclic and any new cycle must pass through v.
    """
    j = colors[v]
    stack = [w for w in succ[v] if colors[w] == j]
    seen: set[int] = set()
    while stack:
        u = stack.pop()
        if u == v:
            return True
        if u in seen:
            continue
        seen.add(u)
        for w in succ[u]:
            if colors[w] == j:
                stack.append(w)
    return False


def dicolorable_brute(d: Digraph, k: int, node_cap: Optional[int] = None) -> SolveOutcome:
    """Exhaustive k-dicolorability by lexicographic backtracking.

    Colorings are explored in lexicographic order with vertex 0 pinned to
    color 0 for k >= 2 (color classes are interchangeable); a partial
    coloring is abandoned as soon as some class contains a cycle, which
    skips exactly the assignments that cannot verify.  The witness is the
    lexicographically least verifying coloring.
    """
    if k < 1:
        raise ValueError(f"color count must be >= 1, got {k}")
    n = d.n
    if n == 0:
        return SolveOutcome(True, Coloring((), k))
    succ = d.out_neighbors
    colors = [-1] * n
    next_color = [0] * n
    limits = [1 if (v == 0 and k >= 2) else k for v in range(n)]
    nodes = 0
    v = 0
    while True:
        c = next_color[v]
        placed = False
        while c < limits[v]:
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                raise ResourceCapError(
                    f"brute-force node cap {node_cap} exceeded", SolveStats(nodes=nodes)
                )
            colors[v] = c
            if not _closes_cycle(succ, colors, v):
                placed = True
                break
            c += 1
        if placed:
            next_color[v] = c
            v += 1
            if v == n:
                witness = Coloring(colors, k)
                assert verify_dicoloring(d, witness)
                return SolveOutcome(True, witness, SolveStats(nodes=nodes))
            next_color[v] = 0
        else:
            colors[v] = -1
            v -= 1
            if v < 0:
                return SolveOutcome(False, None, SolveStats(nodes=nodes))
            next_color[v] = colors[v] + 1
            colors[v] = -1


def dicolorable_cegar(
    d: Digraph, k: int, iteration_cap: int = DEFAULT_ITERATION_CAP
) -> SolveOutcome:
    """k-dicolorability by lazy cycle elimination over the CNF engine.

    The base encoding is one-hot color choice per vertex (with vertex 0
    pinned for k >= 2).  Acyclicity is enforced lazily: each candidate
    coloring with a monochromatic cycle C in color j yields the blocking
    clause "some vertex of C is not colored j".  Each clause removes at
    least one (cycle, color) pattern, and there are finitely many, so the
    loop terminates.
    """
    if k < 1:
        raise ValueError(f"color count must be >= 1, got {k}")
    n = d.n
    if n == 0:
        return SolveOutcome(True, Coloring((), k))

    def var(v: int, j: int) -> int:
        return v * k + j + 1

    formula = CnfFormula(n * k)
    for v in range(n):
        formula.add_clause([var(v, j) for j in range(k)])
        for j1 in range(k):
            for j2 in range(j1 + 1, k):
                formula.add_clause([-var(v, j1), -var(v, j2)])
    if k >= 2:
        formula.add_clause([var(0, 0)])

    iterations = 0
    clauses_added = 0
    while True:
        if iterations >= iteration_cap:
            raise ResourceCapError(
                f"CEGAR iteration cap {iteration_cap} exceeded",
                SolveStats(iterations=iterations, clauses_added=clauses_added),
            )
        iterations += 1
        result = solve(formula)
        stats = SolveStats(iterations=iterations, clauses_added=clauses_added)
        if not result.satisfiable:
            return SolveOutcome(False, None, stats)
        assignment = []
        for v in range(n):
            (j,) = [j for j in range(k) if result.value(var(v, j))]
            assignment.append(j)
        coloring = Coloring(assignment, k)
        cycle = find_monochromatic_cycle(d, coloring)
        if cycle is None:
            assert verify_dicoloring(d, coloring)
            return SolveOutcome(True, coloring, stats)
        j = coloring[cycle[0]]
        formula.add_clause([-var(v, j) for v in cycle])
        clauses_added += 1


def dicolorable(d: Digraph, k: int, config: Optional[SolveConfig] = None) -> SolveOutcome:
    """Dispatch on config.method; verdicts are method-independent."""
    config = config if config is not None else SolveConfig()
    if config.method == "cegar":
        return dicolorable_cegar(d, k, iteration_cap=config.iteration_cap)
    return dicolorable_brute(d, k, node_cap=config.node_cap)


def dichromatic_number(
    d: Digraph, config: Optional[SolveConfig] = None
) -> tuple[int, Coloring]:
    """Least k admitting a k-dicoloring, by ascending search from k = 1.

    Terminates: with every vertex its own color each class is a singleton,
    acyclic since self-loops are excluded.
    """
    if d.n < 1:
        raise ValueError("dichromatic number requires at least one vertex")
    config = config if config is not None else SolveConfig()
    k = 1
    while True:
        outcome = dicolorable(d, k, config)
        if outcome.colorable:
            assert outcome.witness is not None
            return k, outcome.witness
        k += 1


def hyper2colorable(
    h: Hypergraph3, method: str = "brute", node_cap: Optional[int] = None
) -> SolveOutcome:
    """Decide 2-colorability of a 3-uniform hypergraph.

    brute enumerates the 2^(n-1) colorings with vertex 0 pinned; sat uses
    one variable per vertex and, per edge, the clauses "not all true" and
    "not all false".  Both routes must agree.
    """
    if method == "brute":
        return _hyper2colorable_brute(h, node_cap)
    if method == "sat":
        return _hyper2colorable_sat(h)
    raise ValueError(f"unknown method {method!r}")


def _hyper2colorable_brute(h: Hypergraph3, node_cap: Optional[int]) -> SolveOutcome:
    n = h.n
    if n == 0:
        return SolveOutcome(True, Coloring((), 2))
    edges = h.sorted_edges
    nodes = 0
    for m in range(1 << (n - 1)):
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise ResourceCapError(
                f"brute-force node cap {node_cap} exceeded", SolveStats(nodes=nodes)
            )
        # vertex 0 pinned to color 0; remaining bits MSB-first = vertex order
        colors = [0] + [(m >> (n - 2 - i)) & 1 for i in range(n - 1)]
        if all(colors[a] != colors[b] or colors[b] != colors[c] for a, b, c in edges):
            witness = Coloring(colors, 2)
            assert verify_hypercoloring(h, witness)
            return SolveOutcome(True, witness, SolveStats(nodes=nodes))
    return SolveOutcome(False, None, SolveStats(nodes=nodes))


def _hyper2colorable_sat(h: Hypergraph3) -> SolveOutcome:
    formula = CnfFormula(h.n)
    for a, b, c in h.sorted_edges:
        formula.add_clause([a + 1, b + 1, c + 1])
        formula.add_clause([-(a + 1), -(b + 1), -(c + 1)])
    result = solve(formula)
    stats = SolveStats(iterations=1)
    if not result.satisfiable:
        return SolveOutcome(False, None, stats)
    witness = Coloring([1 if result.value(v + 1) else 0 for v in range(h.n)], 2)
    assert verify_hypercoloring(h, witness)
    return SolveOutcome(True, witness, stats)


def whole_graph_acyclic(d: Digraph) -> bool:
    """Convenience: acyclicity of the full vertex set (the k = 1 question)."""
    return is_acyclic(d, range(d.n))
