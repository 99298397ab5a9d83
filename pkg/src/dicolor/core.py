"""Finite digraphs, 3-uniform hypergraphs, colorings, and their verifiers.

Vertices are dense integer indices 0..n-1 throughout; named or sparse
vertices are a concern of the I/O layer.  All types are immutable after
construction and every operation here is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Collection, Iterable, Optional

# A vertex subset is just a set of in-range indices; operations validate range.
VertexSet = frozenset[int]


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 0..n-1 with a set of arcs (u, v), u != v.

    Arcs are a set, not a multiset: multiplicity never affects acyclicity.
    Opposing pairs (u, v) and (v, u) are allowed; self-loops are rejected at
    construction because a self-loop would make every containing color class
    cyclic.
    """

    n: int
    arcs: frozenset[tuple[int, int]]

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arc_set:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range [0, {n})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arc_set)

    @cached_property
    def sorted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            succ[u].append(v)
        return tuple(tuple(vs) for vs in succ)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def without_arc(self, u: int, v: int) -> "Digraph":
        return Digraph(self.n, self.arcs - {(u, v)})


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; edges stored as sorted pairs (u < v)."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            edge_set.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(edge_set))

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))


@dataclass(frozen=True)
class Hypergraph3:
    """3-uniform hypergraph; edges stored canonically as increasing triples.

    The sorted listing of the stored triples is the canonical edge order used
    by the reduction (originals first, auxiliaries grouped per edge).
    """

    n: int
    edges: frozenset[tuple[int, int, int]]

    def __init__(self, n: int, edges: Iterable[Collection[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        edge_set = set()
        for e in edges:
            triple = tuple(sorted(int(v) for v in e))
            if len(triple) != 3 or len(set(triple)) != 3:
                raise ValueError(f"edge {tuple(e)} is not a 3-element set")
            if not all(0 <= v < n for v in triple):
                raise ValueError(f"edge {triple} out of range [0, {n})")
            edge_set.add(triple)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(edge_set))

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int, int], ...]:
        """Canonical edge listing: lexicographically sorted increasing triples."""
        return tuple(sorted(self.edges))


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color, colors in [0, k)."""

    assignment: tuple[int, ...]
    k: int

    def __init__(self, assignment: Iterable[int], k: int):
        values = tuple(int(c) for c in assignment)
        if k < 0:
            raise ValueError(f"color count must be >= 0, got {k}")
        for v, c in enumerate(values):
            if not (0 <= c < k):
                raise ValueError(f"vertex {v} has color {c} outside [0, {k})")
        object.__setattr__(self, "assignment", values)
        object.__setattr__(self, "k", k)

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, vertex: int) -> int:
        return self.assignment[vertex]

    def color_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            classes[c].append(v)
        return classes


def _check_subset(d: Digraph, s: Collection[int]) -> frozenset[int]:
    sub = frozenset(s)
    for v in sub:
        if not (0 <= v < d.n):
            raise ValueError(f"vertex {v} out of range [0, {d.n})")
    return sub


def _check_total(d: Digraph, c: Coloring) -> None:
    if len(c) != d.n:
        raise ValueError(f"coloring covers {len(c)} vertices, digraph has {d.n}")


def is_acyclic(d: Digraph, s: Collection[int]) -> bool:
    """True iff the subgraph of d induced on s has no directed cycle.

    Iterative depth-first search with the usual white/gray/black marking;
    a gray-to-gray arc inside s witnesses a cycle.
    """
    sub = _check_subset(d, s)
    succ = d.out_neighbors
    WHITE, GRAY, BLACK = 0, 1, 2
    state = {v: WHITE for v in sub}
    for root in sub:
        if state[root] != WHITE:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        state[root] = GRAY
        while stack:
            v, i = stack[-1]
            advanced = False
            children = succ[v]
            while i < len(children):
                w = children[i]
                i += 1
                if w not in sub:
                    continue
                if state[w] == GRAY:
                    return False
                if state[w] == WHITE:
                    stack[-1] = (v, i)
                    stack.append((w, 0))
                    state[w] = GRAY
                    advanced = True
                    break
            if not advanced:
                state[v] = BLACK
                stack.pop()
    return True


def _sccs(vertices: list[int], succ_of: dict[int, list[int]]) -> list[list[int]]:
    """Tarjan's strongly connected components, iterative, deterministic order."""
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, i = work[-1]
            if i == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recursed = False
            children = succ_of[v]
            while i < len(children):
                w = children[i]
                i += 1
                if w not in index:
                    work[-1] = (v, i)
                    work.append((w, 0))
                    recursed = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if recursed:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return components


def _shortest_cycle_in_scc(scc: list[int], succ_of: dict[int, list[int]]) -> list[int]:
    """Shortest directed cycle inside one nontrivial SCC, via BFS per vertex.

    The BFS tree path from v to a predecessor u of v is vertex-simple and
    avoids revisiting v, so closing it with the arc (u, v) yields a simple
    cycle; minimizing over start vertices gives a shortest cycle of the SCC.
    """
    members = set(scc)
    best: Optional[list[int]] = None
    for start in sorted(scc):
        dist = {start: 0}
        parent: dict[int, int] = {}
        queue = deque([start])
        closing: Optional[int] = None
        while queue:
            v = queue.popleft()
            if best is not None and dist[v] + 1 >= len(best):
                continue
            for w in succ_of[v]:
                if w == start:
                    closing = v
                    queue.clear()
                    break
                if w in members and w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
        if closing is not None:
            path = [closing]
            while path[-1] != start:
                path.append(parent[path[-1]])
            cycle = list(reversed(path))
            if best is None or len(cycle) < len(best):
                best = cycle
    assert best is not None, "nontrivial SCC must contain a cycle"
    return best


def _canonical_rotation(cycle: list[int]) -> list[int]:
    pivot = cycle.index(min(cycle))
    return cycle[pivot:] + cycle[:pivot]


def find_monochromatic_cycle(d: Digraph, c: Coloring) -> Optional[list[int]]:
    """Find a simple directed cycle whose vertices all share one color.

    Returns a shortest such cycle (ties broken by color, then by the
    deterministic scan order), rotated so the smallest vertex comes first,
    or None if every color class is acyclic.  Short cycles make strong lazy
    constraints, hence the shortest-cycle preference.
    """
    _check_total(d, c)
    succ = d.out_neighbors
    best: Optional[list[int]] = None
    for color in range(c.k):
        members = [v for v in range(d.n) if c[v] == color]
        if len(members) < 2:
            continue
        member_set = set(members)
        succ_of = {v: [w for w in succ[v] if w in member_set] for v in members}
        for scc in _sccs(members, succ_of):
            if len(scc) < 2:
                continue
            cycle = _shortest_cycle_in_scc(scc, succ_of)
            if best is None or len(cycle) < len(best):
                best = cycle
    return _canonical_rotation(best) if best is not None else None


def verify_dicoloring(d: Digraph, c: Coloring) -> bool:
    """True iff every color class of c induces an acyclic subgraph of d."""
    return find_monochromatic_cycle(d, c) is None


def verify_hypercoloring(h: Hypergraph3, c: Coloring) -> bool:
    """True iff no edge of h is monochromatic under the 2-coloring c."""
    if c.k != 2:
        raise ValueError(f"hypergraph colorings use exactly 2 colors, got k={c.k}")
    if len(c) != h.n:
        raise ValueError(f"coloring covers {len(c)} vertices, hypergraph has {h.n}")
    for a, b, e in h.edges:
        if c[a] == c[b] == c[e]:
            return False
    return True
