"""Line-oriented instance, witness, and provenance file formats.

All formats are strict: declared counts must match the body, every line
must parse, and violations of the in-memory type invariants (duplicates,
out-of-range vertices, self-loops) are rejected rather than repaired.
Serialization is canonical - sorted body lines, no comments - so equal
objects produce byte-identical files.  Full grammar in docs/formats.md.
"""

from __future__ import annotations

from typing import Optional, Union

from .core import Coloring, Digraph, Graph, Hypergraph3
from .reduction import AUX_LABELS, Auxiliary, Original, Provenance, ReducedDigraph

Instance = Union[Digraph, Hypergraph3, Graph]


class FormatError(ValueError):
    """Malformed instance, witness, or provenance text."""


def _split_content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("c"):
            continue
        lines.append((lineno, stripped.split()))
    return lines


def _int_fields(lineno: int, fields: list[str], expect: int) -> list[int]:
    if len(fields) != expect:
        raise FormatError(f"line {lineno}: expected {expect} fields, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError as exc:
        raise FormatError(f"line {lineno}: non-integer field") from exc


def parse_instance(text: str) -> Instance:
    """Parse a `p digraph`, `p h3`, or `p graph` instance file."""
    lines = _split_content_lines(text)
    if not lines:
        raise FormatError("empty instance file")
    lineno, header = lines[0]
    if len(header) != 4 or header[0] != "p":
        raise FormatError(f"line {lineno}: expected 'p <kind> <n> <m>' header")
    kind = header[1]
    if kind not in ("digraph", "h3", "graph"):
        raise FormatError(f"line {lineno}: unknown instance kind {kind!r}")
    n, m = _int_fields(lineno, header[2:], 2)
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative count in header")

    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} body lines, found {len(body)}")

    tag = {"digraph": "a", "h3": "e", "graph": "g"}[kind]
    arity = {"a": 2, "e": 3, "g": 2}[tag]
    items = []
    seen = set()
    for lineno, fields in body:
        if fields[0] != tag:
            raise FormatError(f"line {lineno}: expected {tag!r} line in a {kind} file")
        values = tuple(_int_fields(lineno, fields[1:], arity))
        for v in values:
            if not (0 <= v < n):
                raise FormatError(f"line {lineno}: vertex {v} out of range [0, {n})")
        if tag == "a":
            if values[0] == values[1]:
                raise FormatError(f"line {lineno}: self-loop at vertex {values[0]}")
        elif list(values) != sorted(set(values)):
            raise FormatError(f"line {lineno}: vertices must be strictly increasing")
        if values in seen:
            raise FormatError(f"line {lineno}: duplicate {tag!r} line")
        seen.add(values)
        items.append(values)

    if kind == "digraph":
        return Digraph(n, items)
    if kind == "h3":
        return Hypergraph3(n, items)
    return Graph(n, items)


def serialize_instance(instance: Instance) -> str:
    """Canonical text for an instance: sorted body, no comments."""
    if isinstance(instance, Digraph):
        kind, tag, rows = "digraph", "a", instance.sorted_arcs
    elif isinstance(instance, Hypergraph3):
        kind, tag, rows = "h3", "e", instance.sorted_edges
    elif isinstance(instance, Graph):
        kind, tag, rows = "graph", "g", instance.sorted_edges
    else:
        raise TypeError(f"not an instance type: {type(instance).__name__}")
    lines = [f"p {kind} {instance.n} {len(rows)}"]
    for row in rows:
        lines.append(tag + " " + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> tuple[int, Optional[Coloring]]:
    """Parse a witness file: (k, coloring) for COLORABLE, (k, None) otherwise."""
    lines = _split_content_lines(text)
    if not lines:
        raise FormatError("empty witness file")
    lineno, header = lines[0]
    if len(header) != 3 or header[0] != "s":
        raise FormatError(f"line {lineno}: expected 's <verdict> <k>' header")
    verdict = header[1]
    (k,) = _int_fields(lineno, header[2:], 1)
    if verdict == "NOT-COLORABLE":
        if lines[1:]:
            raise FormatError("NOT-COLORABLE witness must have no body")
        return k, None
    if verdict != "COLORABLE":
        raise FormatError(f"line {lineno}: unknown verdict {verdict!r}")

    colors: dict[int, int] = {}
    for lineno, fields in lines[1:]:
        if fields[0] != "v":
            raise FormatError(f"line {lineno}: expected 'v <vertex> <color>'")
        vertex, color = _int_fields(lineno, fields[1:], 2)
        if vertex in colors:
            raise FormatError(f"line {lineno}: vertex {vertex} assigned twice")
        colors[vertex] = color
    n = len(colors)
    if sorted(colors) != list(range(n)):
        raise FormatError("witness must cover vertices 0..n-1 exactly once")
    try:
        return k, Coloring([colors[v] for v in range(n)], k)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def serialize_witness(k: int, coloring: Optional[Coloring]) -> str:
    if coloring is None:
        return f"s NOT-COLORABLE {k}\n"
    lines = [f"s COLORABLE {k}"]
    for v, color in enumerate(coloring.assignment):
        lines.append(f"v {v} {color}")
    return "\n".join(lines) + "\n"


def serialize_provenance(rd: ReducedDigraph) -> str:
    """`o <vertex> <original>` and `x <vertex> <edge-index> <aux-label>` lines."""
    lines = []
    for v, p in enumerate(rd.provenance):
        if isinstance(p, Original):
            lines.append(f"o {v} {p.vertex}")
        else:
            lines.append(f"x {v} {p.edge_index} {p.label}")
    return "\n".join(lines) + "\n" if lines else ""


def parse_provenance(text: str) -> tuple[Provenance, ...]:
    entries: list[Provenance] = []
    for lineno, fields in _split_content_lines(text):
        if fields[0] == "o":
            vertex, original = _int_fields(lineno, fields[1:], 2)
            entry: Provenance = Original(original)
        elif fields[0] == "x":
            if len(fields) != 4:
                raise FormatError(f"line {lineno}: expected 'x <vertex> <edge-index> <aux-label>'")
            vertex, edge_index = _int_fields(lineno, fields[1:3], 2)
            label = fields[3]
            if label not in AUX_LABELS:
                raise FormatError(f"line {lineno}: unknown auxiliary label {label!r}")
            entry = Auxiliary(edge_index, label)
        else:
            raise FormatError(f"line {lineno}: expected 'o' or 'x' line")
        if vertex != len(entries):
            raise FormatError(f"line {lineno}: vertices must appear in order 0, 1, ...")
        entries.append(entry)
    return tuple(entries)
