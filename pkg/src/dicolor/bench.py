"""Cross-checking benchmark suites and the seeded corpora they run on.

Each suite pits two independent routes to the same answer against each
other (brute vs CEGAR, hypergraph vs reduced digraph, chromatic vs
dichromatic) and fails loudly on the first disagreement.  The corpora are
deterministic functions of their parameters, so suite output is stable
across runs and platforms.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from .core import Digraph, Graph, Hypergraph3
from .formats import serialize_instance
from .generators import GenSpec, SplitMix64, fano, gen_digraph, gen_hypergraph
from .reduction import reduce_hypergraph, symmetrize
from .solvers import (
    SolveOutcome,
    dichromatic_number,
    dicolorable_brute,
    dicolorable_cegar,
    hyper2colorable,
    whole_graph_acyclic,
)

CSV_COLUMNS = ("instance", "problem", "k", "method", "verdict", "millis", "iterations", "clauses_added")

SUITE_NAMES = (
    "reduction-equivalence",
    "symmetrize-equivalence",
    "cegar-vs-brute",
    "fano-pipeline",
)


@dataclass(frozen=True)
class BenchRow:
    instance: str
    problem: str
    k: int
    method: str
    verdict: str
    millis: int
    iterations: int = 0
    clauses_added: int = 0

    def as_csv_fields(self) -> tuple[str, ...]:
        return (
            self.instance,
            self.problem,
            str(self.k),
            self.method,
            self.verdict,
            str(self.millis),
            str(self.iterations),
            str(self.clauses_added),
        )


@dataclass(frozen=True)
class BenchResult:
    suite: str
    rows: tuple[BenchRow, ...]
    ok: bool
    message: str = ""
    offending: Optional[str] = None  # serialized offending instance, if any


def _verdict(outcome: SolveOutcome) -> str:
    return "COLORABLE" if outcome.colorable else "NOT-COLORABLE"


def _timed(fn: Callable[[], SolveOutcome]) -> tuple[SolveOutcome, int]:
    start = time.perf_counter()
    outcome = fn()
    return outcome, int((time.perf_counter() - start) * 1000)


# ---------------------------------------------------------------------------
# corpora


def digraph_corpus(count: int = 500, max_n: int = 10, base_seed: int = 20240) -> list[tuple[str, Digraph]]:
    """Seeded random digraphs sweeping vertex count and density."""
    out = []
    for i in range(count):
        n = 1 + (i % max_n)
        m = (i * 37) % (n * (n - 1) + 1)
        spec = GenSpec("digraph-random", n=n, m=m, seed=base_seed + i)
        out.append((f"dg-{i:04d}", gen_digraph(spec)))
    return out


def hypergraph_random_corpus(
    count: int = 300, max_n: int = 7, max_m: int = 5, base_seed: int = 50411
) -> list[tuple[str, Hypergraph3]]:
    """Seeded random 3-uniform hypergraphs with at most max_m edges."""
    out = []
    for i in range(count):
        n = 3 + (i % (max_n - 2))
        m = (i * 7) % (min(max_m, comb(n, 3)) + 1)
        spec = GenSpec("h3-random", n=n, m=m, seed=base_seed + i)
        out.append((f"h3r-{i:04d}", gen_hypergraph(spec)))
    return out


def hypergraph_exhaustive_family(max_n: int = 5) -> list[tuple[str, Hypergraph3]]:
    """Every 3-uniform hypergraph on at most max_n vertices (all edge subsets)."""
    out = []
    for n in range(max_n + 1):
        triples = list(itertools.combinations(range(n), 3))
        for index in range(1 << len(triples)):
            edges = [t for bit, t in enumerate(triples) if index >> bit & 1]
            out.append((f"h3x-n{n}-{index:04d}", Hypergraph3(n, edges)))
    return out


def undirected_exhaustive_family(max_n: int = 5) -> list[tuple[str, Graph]]:
    """Every undirected graph on 1..max_n vertices (raw enumeration)."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for index in range(1 << len(pairs)):
            edges = [p for bit, p in enumerate(pairs) if index >> bit & 1]
            out.append((f"ugx-n{n}-{index:04d}", Graph(n, edges)))
    return out


def undirected_random_corpus(
    count: int = 100, n: int = 6, base_seed: int = 77003
) -> list[tuple[str, Graph]]:
    """Seeded random undirected graphs on n vertices."""
    out = []
    pairs = list(itertools.combinations(range(n), 2))
    for i in range(count):
        m = (i * 7) % (len(pairs) + 1)
        # seeded rank shuffle; the m lowest-ranked pairs form the edge set
        rng = SplitMix64(base_seed + i)
        ranked = sorted(pairs, key=lambda p: rng.next_u64())
        out.append((f"ugr-{i:04d}", Graph(n, ranked[:m])))
    return out


def chromatic_number_brute(g: Graph) -> int:
    """Least k admitting a proper coloring, by backtracking on edges only.

    Deliberately shares nothing with the dicoloring machinery; it is the
    independent side of the symmetrization cross-check.
    """
    if g.n < 1:
        raise ValueError("chromatic number requires at least one vertex")
    neighbors: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.sorted_edges:
        neighbors[u].append(v)
        neighbors[v].append(u)

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def place(v: int) -> bool:
            if v == g.n:
                return True
            limit = 1 if (v == 0 and k >= 2) else k
            for c in range(limit):
                if all(colors[w] != c for w in neighbors[v] if colors[w] >= 0):
                    colors[v] = c
                    if place(v + 1):
                        return True
                    colors[v] = -1
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


# ---------------------------------------------------------------------------
# suites


def _suite_cegar_vs_brute() -> BenchResult:
    rows: list[BenchRow] = []
    for instance_id, d in digraph_corpus():
        acyclic = whole_graph_acyclic(d)
        for k in (1, 2, 3):
            brute, brute_ms = _timed(lambda: dicolorable_brute(d, k))
            cegar, cegar_ms = _timed(lambda: dicolorable_cegar(d, k))
            rows.append(BenchRow(instance_id, "dicolor", k, "brute", _verdict(brute), brute_ms,
                                 0, 0))
            rows.append(BenchRow(instance_id, "dicolor", k, "cegar", _verdict(cegar), cegar_ms,
                                 cegar.stats.iterations, cegar.stats.clauses_added))
            if brute.colorable != cegar.colorable:
                return BenchResult(
                    "cegar-vs-brute", tuple(rows), False,
                    f"{instance_id}: brute and CEGAR disagree at k={k}",
                    serialize_instance(d),
                )
            if k == 1 and brute.colorable != acyclic:
                return BenchResult(
                    "cegar-vs-brute", tuple(rows), False,
                    f"{instance_id}: k=1 verdict disagrees with whole-graph acyclicity",
                    serialize_instance(d),
                )
    return BenchResult("cegar-vs-brute", tuple(rows), True)


def _suite_reduction_equivalence() -> BenchResult:
    rows: list[BenchRow] = []
    corpus = hypergraph_exhaustive_family() + hypergraph_random_corpus()
    for instance_id, h in corpus:
        hyper, hyper_ms = _timed(lambda: hyper2colorable(h, "brute"))
        reduced = reduce_hypergraph(h)
        dicolor, dicolor_ms = _timed(lambda: dicolorable_brute(reduced.graph, 2))
        rows.append(BenchRow(instance_id, "hyper2col", 2, "brute", _verdict(hyper), hyper_ms))
        rows.append(BenchRow(instance_id, "dicolor", 2, "brute", _verdict(dicolor), dicolor_ms))
        if hyper.colorable != dicolor.colorable:
            return BenchResult(
                "reduction-equivalence", tuple(rows), False,
                f"{instance_id}: hypergraph and reduced-digraph verdicts disagree",
                serialize_instance(h),
            )
    return BenchResult("reduction-equivalence", tuple(rows), True)


def _suite_symmetrize_equivalence() -> BenchResult:
    rows: list[BenchRow] = []
    corpus = undirected_exhaustive_family() + undirected_random_corpus()
    for instance_id, g in corpus:
        start = time.perf_counter()
        chi = chromatic_number_brute(g)
        chi_ms = int((time.perf_counter() - start) * 1000)
        start = time.perf_counter()
        dichi, _witness = dichromatic_number(symmetrize(g))
        dichi_ms = int((time.perf_counter() - start) * 1000)
        rows.append(BenchRow(instance_id, "chromatic", chi, "brute", "COLORABLE", chi_ms))
        rows.append(BenchRow(instance_id, "dichromatic", dichi, "brute", "COLORABLE", dichi_ms))
        if chi != dichi:
            return BenchResult(
                "symmetrize-equivalence", tuple(rows), False,
                f"{instance_id}: chromatic {chi} != dichromatic {dichi}",
                serialize_instance(g),
            )
    return BenchResult("symmetrize-equivalence", tuple(rows), True)


def _suite_fano_pipeline() -> BenchResult:
    rows: list[BenchRow] = []
    h = fano()
    reduced = reduce_hypergraph(h)
    expectations = []

    for method in ("brute", "sat"):
        outcome, ms = _timed(lambda: hyper2colorable(h, method))
        rows.append(BenchRow("fano", "hyper2col", 2, method, _verdict(outcome), ms,
                             outcome.stats.iterations, 0))
        expectations.append(("fano " + method, outcome.colorable, False, h))
    for k, expected in ((2, False), (3, True)):
        outcome, ms = _timed(lambda: dicolorable_cegar(reduced.graph, k))
        rows.append(BenchRow("fano-reduced", "dicolor", k, "cegar", _verdict(outcome), ms,
                             outcome.stats.iterations, outcome.stats.clauses_added))
        expectations.append((f"fano-reduced k={k}", outcome.colorable, expected, reduced.graph))

    for what, got, expected, instance in expectations:
        if got != expected:
            return BenchResult(
                "fano-pipeline", tuple(rows), False,
                f"{what}: expected colorable={expected}, got {got}",
                serialize_instance(instance),
            )
    return BenchResult("fano-pipeline", tuple(rows), True)


_SUITES = {
    "cegar-vs-brute": _suite_cegar_vs_brute,
    "reduction-equivalence": _suite_reduction_equivalence,
    "symmetrize-equivalence": _suite_symmetrize_equivalence,
    "fano-pipeline": _suite_fano_pipeline,
}


def run_suite(name: str) -> BenchResult:
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return _SUITES[name]()


def rows_to_csv(rows: tuple[BenchRow, ...]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in sorted(rows, key=lambda r: (r.instance, r.problem, r.k, r.method)):
        lines.append(",".join(row.as_csv_fields()))
    return "\n".join(lines) + "\n"
