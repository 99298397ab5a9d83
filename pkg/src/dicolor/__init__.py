"""Exact dicoloring of digraphs, 2-coloring of 3-uniform hypergraphs, and
the certified gadget reduction between them."""

from .cnf import CnfFormula, SatResult, export_dimacs, parse_dimacs, solve
from .core import (
    Coloring,
    Digraph,
    Graph,
    Hypergraph3,
    VertexSet,
    find_monochromatic_cycle,
    is_acyclic,
    verify_dicoloring,
    verify_hypercoloring,
)
from .reduction import (
    GadgetTemplate,
    ReducedDigraph,
    TEMPLATE,
    check_gadget_property,
    gadget_extension_table,
    lift_forward,
    reduce_hypergraph,
    restrict,
    symmetrize,
)
from .solvers import (
    ResourceCapError,
    SolveConfig,
    SolveOutcome,
    SolveStats,
    dichromatic_number,
    dicolorable,
    dicolorable_brute,
    dicolorable_cegar,
    hyper2colorable,
)

__all__ = [
    "CnfFormula",
    "SatResult",
    "export_dimacs",
    "parse_dimacs",
    "solve",
    "Coloring",
    "Digraph",
    "Graph",
    "Hypergraph3",
    "VertexSet",
    "find_monochromatic_cycle",
    "is_acyclic",
    "verify_dicoloring",
    "verify_hypercoloring",
    "GadgetTemplate",
    "ReducedDigraph",
    "TEMPLATE",
    "check_gadget_property",
    "gadget_extension_table",
    "lift_forward",
    "reduce_hypergraph",
    "restrict",
    "symmetrize",
    "ResourceCapError",
    "SolveConfig",
    "SolveOutcome",
    "SolveStats",
    "dichromatic_number",
    "dicolorable",
    "dicolorable_brute",
    "dicolorable_cegar",
    "hyper2colorable",
]

__version__ = "0.1.0"
