import pytest
from hypothesis import given, settings, strategies as st

from dicolor.core import Coloring, Digraph, Graph, Hypergraph3
from dicolor.formats import (
    FormatError,
    parse_instance,
    parse_provenance,
    parse_witness,
    serialize_instance,
    serialize_provenance,
    serialize_witness,
)
from dicolor.generators import GenSpec, gen_digraph, gen_hypergraph
from dicolor.reduction import reduce_hypergraph


class TestInstanceRoundTrip:
    def test_digraph(self):
        d = Digraph(3, [(0, 1), (2, 0), (1, 0)])
        assert parse_instance(serialize_instance(d)) == d

    def test_hypergraph(self):
        h = Hypergraph3(5, [(0, 1, 4), (1, 2, 3)])
        assert parse_instance(serialize_instance(h)) == h

    def test_graph(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert parse_instance(serialize_instance(g)) == g

    def test_canonical_bytes(self):
        d = Digraph(3, [(2, 0), (0, 1)])
        text = serialize_instance(d)
        assert text == "p digraph 3 2\na 0 1\na 2 0\n"
        assert serialize_instance(parse_instance(text)) == text

    def test_comments_and_blank_lines_ignored(self):
        text = "c made by hand\n\np digraph 2 1\nc body next\na 0 1\n"
        assert parse_instance(text) == Digraph(2, [(0, 1)])

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 20), st.integers(0, 2**32))
    def test_digraph_round_trip_property(self, n, m_raw, seed):
        m = m_raw % (n * (n - 1) + 1)
        d = gen_digraph(GenSpec("digraph-random", n=n, m=m, seed=seed))
        assert parse_instance(serialize_instance(d)) == d


BAD_INSTANCES = [
    ("", "empty"),
    ("p digraph 2\na 0 1\n", "header"),
    ("p widget 2 1\na 0 1\n", "unknown instance kind"),
    ("p digraph 2 2\na 0 1\n", "declares 2 body lines"),
    ("p digraph 2 0\na 0 1\n", "declares 0 body lines"),
    ("p digraph 2 1\na 0 2\n", "out of range"),
    ("p digraph 2 1\na 1 1\n", "self-loop"),
    ("p digraph 3 2\na 0 1\na 0 1\n", "duplicate"),
    ("p digraph 3 1\ne 0 1 2\n", "expected 'a' line"),
    ("p h3 4 1\ne 2 1 0\n", "strictly increasing"),
    ("p h3 4 1\ne 0 1 1\n", "strictly increasing"),
    ("p graph 3 1\ng 2 1\n", "strictly increasing"),
    ("p digraph 2 1\na 0 x\n", "non-integer"),
    ("p digraph -1 0\n", "negative"),
]


@pytest.mark.parametrize("text,fragment", BAD_INSTANCES)
def test_parse_rejects(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_instance(text)


class TestWitness:
    def test_colorable_round_trip(self):
        c = Coloring((0, 1, 0), 2)
        k, parsed = parse_witness(serialize_witness(2, c))
        assert k == 2 and parsed == c

    def test_not_colorable_round_trip(self):
        text = serialize_witness(2, None)
        assert text == "s NOT-COLORABLE 2\n"
        assert parse_witness(text) == (2, None)

    def test_canonical_bytes(self):
        assert serialize_witness(2, Coloring((1, 0), 2)) == "s COLORABLE 2\nv 0 1\nv 1 0\n"

    def test_rejects_duplicate_vertex(self):
        with pytest.raises(FormatError, match="twice"):
            parse_witness("s COLORABLE 2\nv 0 0\nv 0 1\n")

    def test_rejects_gap_in_vertices(self):
        with pytest.raises(FormatError, match="exactly once"):
            parse_witness("s COLORABLE 2\nv 0 0\nv 2 1\n")

    def test_rejects_out_of_range_color(self):
        with pytest.raises(FormatError, match="outside"):
            parse_witness("s COLORABLE 2\nv 0 5\n")

    def test_rejects_body_after_not_colorable(self):
        with pytest.raises(FormatError, match="no body"):
            parse_witness("s NOT-COLORABLE 2\nv 0 0\n")

    def test_rejects_unknown_verdict(self):
        with pytest.raises(FormatError, match="verdict"):
            parse_witness("s MAYBE 2\n")


class TestProvenance:
    def test_round_trip(self):
        rd = reduce_hypergraph(Hypergraph3(4, [(0, 1, 2), (0, 1, 3)]))
        text = serialize_provenance(rd)
        assert parse_provenance(text) == rd.provenance

    def test_exact_lines_for_single_edge(self):
        rd = reduce_hypergraph(Hypergraph3(3, [(0, 1, 2)]))
        assert serialize_provenance(rd) == (
            "o 0 0\no 1 1\no 2 2\nx 3 0 a'\nx 4 0 b'\nx 5 0 c'\n"
        )

    def test_rejects_out_of_order_vertices(self):
        with pytest.raises(FormatError, match="in order"):
            parse_provenance("o 1 1\no 0 0\n")

    def test_rejects_unknown_label(self):
        with pytest.raises(FormatError, match="label"):
            parse_provenance("x 0 0 q'\n")

    @settings(max_examples=40, deadline=None)
    @given(st.integers(3, 7), st.integers(0, 4), st.integers(0, 2**32))
    def test_round_trip_property(self, n, m_raw, seed):
        from math import comb

        m = m_raw % (min(4, comb(n, 3)) + 1)
        h = gen_hypergraph(GenSpec("h3-random", n=n, m=m, seed=seed))
        rd = reduce_hypergraph(h)
        assert parse_provenance(serialize_provenance(rd)) == rd.provenance
