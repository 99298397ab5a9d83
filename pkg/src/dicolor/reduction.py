"""The template gadget, the hypergraph-to-digraph reduction, and coloring
transfer in both directions, plus symmetrization of undirected graphs.

The whole construction rests on one finite fact about the six-vertex
template: a 2-coloring of its three shared vertices extends to a
2-dicoloring of the full gadget exactly when the shared colors are not all
equal.  `check_gadget_property` establishes this by exhausting all 64 total
colorings, so a transcription error in the arc table cannot survive the
test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .core import (
    Coloring,
    Digraph,
    Graph,
    Hypergraph3,
    is_acyclic,
    verify_dicoloring,
    verify_hypercoloring,
)

SHARED_LABELS = ("a", "b", "c")
AUX_LABELS = ("a'", "b'", "c'")

# Frozen arc table of the template gadget: a transitive triangle on the
# shared vertices, a directed triangle on the auxiliaries, and six arcs
# weaving the two together.
GADGET_ARCS = (
    ("a", "b"),
    ("b", "c"),
    ("a", "c"),
    ("a'", "b'"),
    ("b'", "c'"),
    ("c'", "a'"),
    ("c'", "a"),
    ("c", "a'"),
    ("b'", "a"),
    ("b", "c'"),
    ("a'", "b"),
    ("c", "b'"),
)


@dataclass(frozen=True)
class GadgetTemplate:
    """Labeled digraph with shared vertices a, b, c and auxiliaries a', b', c'.

    Mutated templates (arcs added or removed) are allowed so the property
    checker can be exercised against broken transcriptions; the canonical
    template is the module constant TEMPLATE.
    """

    shared: tuple[str, str, str] = SHARED_LABELS
    aux: tuple[str, str, str] = AUX_LABELS
    arcs: tuple[tuple[str, str], ...] = GADGET_ARCS

    def __post_init__(self) -> None:
        labels = self.shared + self.aux
        if len(set(labels)) != 6:
            raise ValueError("template needs 6 distinct labels")
        for u, v in self.arcs:
            if u == v or u not in labels or v not in labels:
                raise ValueError(f"bad template arc ({u}, {v})")
        if len(set(self.arcs)) != len(self.arcs):
            raise ValueError("duplicate template arc")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.shared + self.aux

    def as_digraph(self) -> Digraph:
        """The gadget on vertices 0..5 ordered a, b, c, a', b', c'."""
        index = {label: i for i, label in enumerate(self.labels)}
        return Digraph(6, ((index[u], index[v]) for u, v in self.arcs))

    def is_canonical(self) -> bool:
        return (
            self.shared == SHARED_LABELS
            and self.aux == AUX_LABELS
            and self.arcs == GADGET_ARCS
            and not is_acyclic(self.as_digraph(), range(6))
        )


TEMPLATE = GadgetTemplate()

SharedColoring = tuple[int, int, int]
Extension = tuple[int, int, int]


def gadget_extension_table(
    template: GadgetTemplate = TEMPLATE,
) -> dict[SharedColoring, tuple[Extension, ...]]:
    """For each coloring of (a, b, c), the extensions of (a', b', c') that
    make the combined map a 2-dicoloring of the gadget.

    Computed by exhausting all 8 x 8 total colorings through the dicoloring
    verifier; extensions are listed in ascending binary order, so index 0
    is the canonical deterministic selection.
    """
    gadget = template.as_digraph()
    table: dict[SharedColoring, tuple[Extension, ...]] = {}
    for sigma in itertools.product((0, 1), repeat=3):
        good = [
            tau
            for tau in itertools.product((0, 1), repeat=3)
            if verify_dicoloring(gadget, Coloring(sigma + tau, 2))
        ]
        table[sigma] = tuple(good)
    return table


@lru_cache(maxsize=1)
def _canonical_extension_table() -> dict[SharedColoring, tuple[Extension, ...]]:
    return gadget_extension_table(TEMPLATE)


@dataclass(frozen=True)
class GadgetReport:
    """Outcome of the extension-table exhaustion for one template."""

    holds: bool
    rows: tuple[tuple[SharedColoring, int], ...]
    violations: tuple[SharedColoring, ...]


def check_gadget_property(template: GadgetTemplate = TEMPLATE) -> GadgetReport:
    """Check the defining biconditional of the template gadget.

    Holds iff every constant shared coloring has no extension and every
    non-constant one has at least one.  A failing report pinpoints the
    offending shared colorings.
    """
    table = gadget_extension_table(template)
    rows = []
    violations = []
    for sigma in sorted(table):
        count = len(table[sigma])
        rows.append((sigma, count))
        constant = sigma[0] == sigma[1] == sigma[2]
        if constant != (count == 0):
            violations.append(sigma)
    return GadgetReport(not violations, tuple(rows), tuple(violations))


@dataclass(frozen=True)
class Original:
    vertex: int


@dataclass(frozen=True)
class Auxiliary:
    edge_index: int
    label: str


Provenance = Union[Original, Auxiliary]


@dataclass(frozen=True)
class ReducedDigraph:
    """A reduced digraph plus, per vertex, where it came from.

    Original vertices occupy indices 0..n-1 in hypergraph order; the three
    auxiliaries of edge i follow at n + 3i, ordered a', b', c'.
    """

    graph: Digraph
    provenance: tuple[Provenance, ...]

    def __post_init__(self) -> None:
        if len(self.provenance) != self.graph.n:
            raise ValueError("provenance must cover every vertex exactly once")
        n = self.original_count
        for v, p in enumerate(self.provenance):
            if isinstance(p, Original):
                ok = p.vertex == v < n
            else:
                ok = v == aux_vertex(n, p.edge_index, AUX_LABELS.index(p.label))
            if not ok:
                raise ValueError(f"vertex {v} violates the numbering law ({p})")

    @property
    def original_count(self) -> int:
        return sum(1 for p in self.provenance if isinstance(p, Original))


def aux_vertex(n: int, edge_index: int, aux_position: int) -> int:
    """Index of an auxiliary vertex under the fixed numbering law."""
    return n + 3 * edge_index + aux_position


def reduce_hypergraph(h: Hypergraph3) -> ReducedDigraph:
    """Build the reduced digraph: one gadget copy per canonically sorted edge.

    For edge (v1, v2, v3) the shared labels a, b, c map to v1, v2, v3 and
    the auxiliary labels map to that edge's three fresh vertices.  Arcs
    shared between gadget copies merge by set union, so the arc count is
    at most 12 per edge with equality when edges are pairwise disjoint.
    """
    edges = h.sorted_edges
    n_total = h.n + 3 * len(edges)
    arcs: set[tuple[int, int]] = set()
    provenance: list[Provenance] = [Original(v) for v in range(h.n)]
    for e_idx, edge in enumerate(edges):
        substitution = dict(zip(SHARED_LABELS, edge))
        for pos, label in enumerate(AUX_LABELS):
            substitution[label] = aux_vertex(h.n, e_idx, pos)
            provenance.append(Auxiliary(e_idx, label))
        for u, v in GADGET_ARCS:
            arcs.add((substitution[u], substitution[v]))
    return ReducedDigraph(Digraph(n_total, arcs), tuple(provenance))


def lift_forward(h: Hypergraph3, c: Coloring) -> Coloring:
    """Extend a verifying 2-coloring of h to a 2-dicoloring of its reduction.

    Original vertices keep their colors; each edge's auxiliaries receive the
    lexicographically least extension for the induced shared coloring.  The
    choice is independent per edge since auxiliaries of distinct gadget
    copies are disjoint.
    """
    if not verify_hypercoloring(h, c):
        raise ValueError("coloring does not verify on the hypergraph; some gadget would have no extension")
    table = _canonical_extension_table()
    assignment = list(c.assignment)
    for edge in h.sorted_edges:
        sigma = (c[edge[0]], c[edge[1]], c[edge[2]])
        extensions = table[sigma]
        assignment.extend(extensions[0])
    lifted = Coloring(assignment, 2)
    assert verify_dicoloring(reduce_hypergraph(h).graph, lifted)
    return lifted


def restrict(rd: ReducedDigraph, psi: Coloring) -> Coloring:
    """Restriction of a coloring of the reduced digraph to the originals.

    Unconditional: no verification is claimed unless psi itself verifies,
    in which case the restriction verifies on the source hypergraph.
    """
    if len(psi) != rd.graph.n:
        raise ValueError(f"coloring covers {len(psi)} vertices, reduced digraph has {rd.graph.n}")
    return Coloring(psi.assignment[: rd.original_count], psi.k)


def symmetrize(g: Graph) -> Digraph:
    """Replace each undirected edge {u, v} with opposing arcs (u, v), (v, u).

    A vertex set is acyclic in the result iff it is independent in g, so
    dicoloring questions about the output are coloring questions about the
    input.
    """
    arcs: list[tuple[int, int]] = []
    for u, v in g.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(g.n, arcs)
