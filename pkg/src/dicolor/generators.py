"""Seeded instance generators and named instances for tests and benchmarks.

Randomness comes from a self-contained splitmix64 generator (public-domain
algorithm; constants documented in docs/formats.md) rather than the
platform RNG, so the same generation request yields bit-identical
instances on every platform and in any reimplementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .core import Digraph, Graph, Hypergraph3
from .reduction import TEMPLATE, symmetrize

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: 64-bit state advanced by a fixed odd constant, output
    mixed by two xor-shift-multiply rounds."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-enough draw in [0, bound); plain modulo, by design, so the
        draw sequence is trivial to reproduce elsewhere."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def coin(self) -> int:
        return self.next_u64() & 1


@dataclass(frozen=True)
class GenSpec:
    """Instance-generation request; seed is mandatory for random models."""

    model: str  # h3-random | digraph-random | tournament-random | named
    n: int = 0
    m: int = 0
    seed: Optional[int] = None
    name: str = ""
    circulant: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        models = ("h3-random", "digraph-random", "tournament-random", "named")
        if self.model not in models:
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == "named":
            if not self.name:
                raise ValueError("named model requires a name")
        elif self.model == "tournament-random" and self.circulant is not None:
            pass  # circulant tournaments are fully determined without a seed
        elif self.seed is None:
            raise ValueError(f"model {self.model!r} requires a seed")


def gen_hypergraph(spec: GenSpec) -> Hypergraph3:
    """m distinct uniform triples on n vertices, by rejection sampling."""
    if spec.model != "h3-random":
        raise ValueError(f"expected h3-random spec, got {spec.model!r}")
    n, m = spec.n, spec.m
    if m > comb(n, 3):
        raise ValueError(f"cannot place {m} distinct triples on {n} vertices")
    rng = SplitMix64(spec.seed)
    edges: set[tuple[int, int, int]] = set()
    while len(edges) < m:
        u, v, w = rng.below(n), rng.below(n), rng.below(n)
        if u == v or v == w or u == w:
            continue
        edges.add(tuple(sorted((u, v, w))))
    return Hypergraph3(n, edges)


def gen_digraph(spec: GenSpec) -> Digraph:
    """m distinct uniform arcs on n vertices, by rejection sampling."""
    if spec.model != "digraph-random":
        raise ValueError(f"expected digraph-random spec, got {spec.model!r}")
    n, m = spec.n, spec.m
    if m > n * (n - 1):
        raise ValueError(f"cannot place {m} distinct arcs on {n} vertices")
    rng = SplitMix64(spec.seed)
    arcs: set[tuple[int, int]] = set()
    while len(arcs) < m:
        u, v = rng.below(n), rng.below(n)
        if u == v:
            continue
        arcs.add((u, v))
    return Digraph(n, arcs)


def gen_tournament(spec: GenSpec) -> Digraph:
    """One arc per unordered pair.

    Random model: orientation i -> j (for i < j) iff the seeded coin shows 1.
    Circulant option: arcs i -> i + s (mod n) for each s in the connection
    set, which must pick exactly one of {d, n - d} for every d, forcing n odd.
    """
    if spec.model != "tournament-random":
        raise ValueError(f"expected tournament-random spec, got {spec.model!r}")
    n = spec.n
    if spec.circulant is not None:
        conn = set(spec.circulant)
        if n % 2 == 0:
            raise ValueError("circulant tournaments require odd n")
        for d in range(1, n):
            if (d in conn) == (n - d in conn):
                raise ValueError(
                    f"connection set must contain exactly one of {{{d}, {n - d}}}"
                )
        return Digraph(n, ((i, (i + s) % n) for i in range(n) for s in conn))
    rng = SplitMix64(spec.seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            arcs.append((i, j) if rng.coin() else (j, i))
    return Digraph(n, arcs)


# The 7-point, 7-line triple system: every pair of lines meets in one point.
FANO_EDGES = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)


def fano() -> Hypergraph3:
    return Hypergraph3(7, FANO_EDGES)


def dicycle(n: int) -> Digraph:
    """Single directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
    if n < 2:
        raise ValueError(f"a directed cycle needs at least 2 vertices, got {n}")
    return Digraph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_symmetric(n: int) -> Digraph:
    """The complete graph on n vertices with every edge doubled into arcs."""
    return symmetrize(Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n))))


def named_instance(name: str) -> Digraph | Hypergraph3:
    """Named instances: fano, gadget, dicycle-<n>, complete-k<n>."""
    if name == "fano":
        return fano()
    if name == "gadget":
        return TEMPLATE.as_digraph()
    if name.startswith("dicycle-"):
        return dicycle(int(name.removeprefix("dicycle-")))
    if name.startswith("complete-k"):
        return complete_symmetric(int(name.removeprefix("complete-k")))
    raise ValueError(f"unknown named instance {name!r}")


def generate(spec: GenSpec) -> Digraph | Hypergraph3:
    """Single entry point used by the CLI."""
    if spec.model == "h3-random":
        return gen_hypergraph(spec)
    if spec.model == "digraph-random":
        return gen_digraph(spec)
    if spec.model == "tournament-random":
        return gen_tournament(spec)
    return named_instance(spec.name)
