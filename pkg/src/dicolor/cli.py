"""Command-line front end.

Exit codes are the machine contract: 10 colorable, 20 not colorable,
0 success for non-decision commands, 1 usage or parse error, 2 resource
cap exceeded, 3 benchmark cross-check disagreement.  Standard output is
human-facing and may change.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional, Sequence

from . import bench as bench_mod
from .cnf import CnfFormula, export_dimacs
from .core import Digraph, Graph, Hypergraph3, find_monochromatic_cycle
from .formats import (
    FormatError,
    parse_instance,
    parse_witness,
    serialize_instance,
    serialize_provenance,
    serialize_witness,
)
from .generators import GenSpec, generate
from .reduction import check_gadget_property, reduce_hypergraph, symmetrize
from .solvers import (
    DEFAULT_ITERATION_CAP,
    ResourceCapError,
    SolveStats,
    dicolorable_brute,
    dicolorable_cegar,
    hyper2colorable,
)

EXIT_COLORABLE = 10
EXIT_NOT_COLORABLE = 20
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_DISAGREEMENT = 3

ITERATION_CAP_ENV = "DICOLOR_ITERATION_CAP"
NODE_CAP_ENV = "DICOLOR_NODE_CAP"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 means "resource cap" here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _env_cap(name: str, fallback: Optional[int]) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"environment variable {name} must be an integer, got {raw!r}")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}")


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _solve_cnf_dump(d_or_h, problem: str, k: int) -> CnfFormula:
    """Rebuild the base encoding the solver would use, for --dump-cnf."""
    if problem == "hyper2col":
        formula = CnfFormula(d_or_h.n)
        for a, b, c in d_or_h.sorted_edges:
            formula.add_clause([a + 1, b + 1, c + 1])
            formula.add_clause([-(a + 1), -(b + 1), -(c + 1)])
        return formula
    formula = CnfFormula(d_or_h.n * k)

    def var(v: int, j: int) -> int:
        return v * k + j + 1

    for v in range(d_or_h.n):
        formula.add_clause([var(v, j) for j in range(k)])
        for j1 in range(k):
            for j2 in range(j1 + 1, k):
                formula.add_clause([-var(v, j1), -var(v, j2)])
    if k >= 2 and d_or_h.n > 0:
        formula.add_clause([var(0, 0)])
    return formula


def cmd_solve(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.input))
    iteration_cap = args.iteration_cap
    if iteration_cap is None:
        iteration_cap = _env_cap(ITERATION_CAP_ENV, DEFAULT_ITERATION_CAP)
    node_cap = args.node_cap
    if node_cap is None:
        node_cap = _env_cap(NODE_CAP_ENV, None)

    start = time.perf_counter()
    if args.problem == "dicolor":
        if not isinstance(instance, Digraph):
            raise FormatError("--problem dicolor requires a 'p digraph' instance")
        if args.method == "brute":
            outcome = dicolorable_brute(instance, args.k, node_cap=node_cap)
        elif args.method == "cegar":
            outcome = dicolorable_cegar(instance, args.k, iteration_cap=iteration_cap)
        else:
            raise FormatError("--problem dicolor supports methods brute and cegar")
    else:
        if not isinstance(instance, Hypergraph3):
            raise FormatError("--problem hyper2col requires a 'p h3' instance")
        if args.k != 2:
            raise FormatError("hypergraph coloring is 2-color only; use --k 2")
        if args.method not in ("brute", "sat"):
            raise FormatError("--problem hyper2col supports methods brute and sat")
        outcome = hyper2colorable(instance, args.method, node_cap=node_cap)
    millis = int((time.perf_counter() - start) * 1000)

    if args.dump_cnf:
        if args.method not in ("sat", "cegar"):
            raise FormatError("--dump-cnf requires a SAT-backed method (sat or cegar)")
        _write(args.dump_cnf, export_dimacs(_solve_cnf_dump(instance, args.problem, args.k)))

    if args.stats:
        _write(args.stats, _stats_text(outcome.stats, millis))
    if outcome.colorable:
        print(f"s COLORABLE {args.k}")
        if args.witness:
            _write(args.witness, serialize_witness(args.k, outcome.witness))
        return EXIT_COLORABLE
    print(f"s NOT-COLORABLE {args.k}")
    if args.witness:
        _write(args.witness, serialize_witness(args.k, None))
    return EXIT_NOT_COLORABLE


def _stats_text(stats: SolveStats, millis: int) -> str:
    return (
        f"nodes={stats.nodes}\n"
        f"iterations={stats.iterations}\n"
        f"clauses_added={stats.clauses_added}\n"
        f"millis={millis}\n"
    )


def cmd_reduce(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.input))
    if not isinstance(instance, Hypergraph3):
        raise FormatError("reduce requires a 'p h3' instance")
    reduced = reduce_hypergraph(instance)
    _write(args.out, serialize_instance(reduced.graph))
    if args.provenance:
        _write(args.provenance, serialize_provenance(reduced))
    print(f"reduced: {reduced.graph.n} vertices, {len(reduced.graph.arcs)} arcs")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    k, coloring = parse_witness(_read(args.witness))
    if coloring is None:
        print("witness is NOT-COLORABLE; nothing to verify", file=sys.stderr)
        return EXIT_USAGE
    if len(coloring) != instance.n:
        raise FormatError(
            f"witness covers {len(coloring)} vertices, instance has {instance.n}"
        )
    if isinstance(instance, Digraph):
        cycle = find_monochromatic_cycle(instance, coloring)
        if cycle is None:
            print("verified: every color class is acyclic")
            return 0
        print("monochromatic cycle: " + " -> ".join(str(v) for v in cycle + [cycle[0]]))
        return EXIT_USAGE
    if isinstance(instance, Hypergraph3):
        if k != 2:
            raise FormatError("hypergraph witnesses must use k=2")
        for a, b, c in instance.sorted_edges:
            if coloring[a] == coloring[b] == coloring[c]:
                print(f"monochromatic edge: {{{a}, {b}, {c}}}")
                return EXIT_USAGE
        print("verified: no monochromatic edge")
        return 0
    raise FormatError("verify supports digraph and h3 instances")


def cmd_gadget_check(args: argparse.Namespace) -> int:
    report = check_gadget_property()
    print("shared coloring  extensions")
    for sigma, count in report.rows:
        print(f"  {sigma[0]} {sigma[1]} {sigma[2]}          {count}")
    if report.holds:
        print("gadget property holds: extensions exist iff the shared coloring is non-constant")
        return 0
    print(f"gadget property VIOLATED at: {report.violations}", file=sys.stderr)
    return EXIT_USAGE


def cmd_gen(args: argparse.Namespace) -> int:
    circulant = None
    if args.circulant:
        circulant = tuple(int(x) for x in args.circulant.split(","))
    try:
        spec = GenSpec(
            model=args.model,
            n=args.n,
            m=args.m,
            seed=args.seed,
            name=args.name,
            circulant=circulant,
        )
        instance = generate(spec)
    except ValueError as exc:
        raise FormatError(str(exc))
    text = serialize_instance(instance)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_symmetrize(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.input))
    if not isinstance(instance, Graph):
        raise FormatError("symmetrize requires a 'p graph' instance")
    _write(args.out, serialize_instance(symmetrize(instance)))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    result = bench_mod.run_suite(args.suite)
    _write(args.out, bench_mod.rows_to_csv(result.rows))
    if result.ok:
        print(f"{args.suite}: {len(result.rows)} rows, all cross-checks agree")
        return 0
    offending_path = args.out + ".offending"
    if result.offending is not None:
        _write(offending_path, result.offending)
    print(f"{args.suite}: DISAGREEMENT - {result.message}", file=sys.stderr)
    print(f"offending instance written to {offending_path}", file=sys.stderr)
    return EXIT_DISAGREEMENT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dicolor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide colorability of an instance")
    p_solve.add_argument("input", help="instance file (p digraph or p h3)")
    p_solve.add_argument("--problem", choices=("dicolor", "hyper2col"), required=True)
    p_solve.add_argument("--k", type=int, default=2, help="number of colors (default 2)")
    p_solve.add_argument("--method", choices=("brute", "cegar", "sat"), default="brute")
    p_solve.add_argument("--witness", help="write witness file here")
    p_solve.add_argument("--stats", help="write key=value statistics here")
    p_solve.add_argument("--dump-cnf", help="write the base CNF encoding as DIMACS")
    p_solve.add_argument("--iteration-cap", type=int, default=None,
                         help=f"CEGAR iteration cap (default ${ITERATION_CAP_ENV} or {DEFAULT_ITERATION_CAP})")
    p_solve.add_argument("--node-cap", type=int, default=None,
                         help=f"brute-force node cap (default ${NODE_CAP_ENV} or unlimited)")
    p_solve.set_defaults(func=cmd_solve)

    p_reduce = sub.add_parser("reduce", help="reduce a hypergraph to a digraph")
    p_reduce.add_argument("input", help="instance file (p h3)")
    p_reduce.add_argument("--out", required=True, help="output digraph file")
    p_reduce.add_argument("--provenance", help="output provenance file")
    p_reduce.set_defaults(func=cmd_reduce)

    p_verify = sub.add_parser("verify", help="verify a witness against an instance")
    p_verify.add_argument("instance")
    p_verify.add_argument("witness")
    p_verify.set_defaults(func=cmd_verify)

    p_gadget = sub.add_parser("gadget-check", help="exhaustively check the template gadget")
    p_gadget.set_defaults(func=cmd_gadget_check)

    p_gen = sub.add_parser("gen", help="generate an instance")
    p_gen.add_argument("--model", required=True,
                       choices=("h3-random", "digraph-random", "tournament-random", "named"))
    p_gen.add_argument("--n", type=int, default=0)
    p_gen.add_argument("--m", type=int, default=0)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--name", default="",
                       help="named instance: fano, gadget, dicycle-<n>, complete-k<n>")
    p_gen.add_argument("--circulant", default="",
                       help="comma-separated connection set for circulant tournaments")
    p_gen.add_argument("--out", help="output file (default: stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_sym = sub.add_parser("symmetrize", help="double undirected edges into opposing arcs")
    p_sym.add_argument("input", help="instance file (p graph)")
    p_sym.add_argument("--out", required=True, help="output digraph file")
    p_sym.set_defaults(func=cmd_symmetrize)

    p_bench = sub.add_parser("bench", help="run a cross-checking benchmark suite")
    p_bench.add_argument("--suite", required=True, choices=bench_mod.SUITE_NAMES)
    p_bench.add_argument("--out", required=True, help="output CSV file")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        print(_stats_text(exc.stats, 0), file=sys.stderr, end="")
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
