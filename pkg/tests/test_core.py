import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dicolor.core import (
    Coloring,
    Digraph,
    Graph,
    Hypergraph3,
    find_monochromatic_cycle,
    is_acyclic,
    verify_dicoloring,
    verify_hypercoloring,
)
from dicolor.generators import GenSpec, fano, gen_digraph
from dicolor.reduction import TEMPLATE, symmetrize

from oracles import has_cycle, simple_cycles


def digraphs(max_n=8, max_m=None):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda a: a[0] != a[1]
            ),
            max_size=max_m if max_m is not None else 3 * n,
        ).map(lambda arcs: Digraph(n, arcs))
    )


def colorings_of(d, max_k=3):
    return st.integers(1, max_k).flatmap(
        lambda k: st.tuples(*[st.integers(0, k - 1) for _ in range(d.n)]).map(
            lambda a: Coloring(a, k)
        )
    )


class TestTypes:
    def test_digraph_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Digraph(3, [(1, 1)])

    def test_digraph_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Digraph(2, [(0, 2)])

    def test_digraph_deduplicates_arcs(self):
        d = Digraph(3, [(0, 1), (0, 1), (1, 0)])
        assert d.sorted_arcs == ((0, 1), (1, 0))

    def test_hypergraph_canonicalizes_triples(self):
        h = Hypergraph3(4, [(2, 0, 1), (0, 1, 2)])
        assert h.sorted_edges == ((0, 1, 2),)

    def test_hypergraph_rejects_degenerate_edge(self):
        with pytest.raises(ValueError, match="3-element"):
            Hypergraph3(4, [(0, 1, 1)])
        with pytest.raises(ValueError, match="out of range"):
            Hypergraph3(3, [(0, 1, 3)])

    def test_coloring_rejects_out_of_range_color(self):
        with pytest.raises(ValueError, match="outside"):
            Coloring((0, 2), 2)

    def test_coloring_color_classes(self):
        assert Coloring((0, 1, 0), 2).color_classes() == [[0, 2], [1]]

    def test_graph_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(0, 0)])


class TestIsAcyclic:
    def test_empty_set_is_acyclic(self):
        d = Digraph(4, [(0, 1), (1, 0)])
        assert is_acyclic(d, []) is True

    def test_two_cycle(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert is_acyclic(d, {0, 1}) is False
        assert is_acyclic(d, {0}) is True

    def test_gadget_is_cyclic(self):
        assert is_acyclic(TEMPLATE.as_digraph(), range(6)) is False

    def test_out_of_range_vertex(self):
        with pytest.raises(ValueError, match="out of range"):
            is_acyclic(Digraph(2, [(0, 1)]), {0, 5})

    def test_agrees_with_cycle_enumeration_exhaustively(self):
        # every digraph on 3 vertices, every subset
        pairs = [(u, v) for u in range(3) for v in range(3) if u != v]
        for bits in range(1 << len(pairs)):
            d = Digraph(3, [p for i, p in enumerate(pairs) if bits >> i & 1])
            for r in range(4):
                for s in itertools.combinations(range(3), r):
                    assert is_acyclic(d, s) == (not simple_cycles(d, s))

    def test_agrees_with_oracle_on_seeded_corpus(self):
        for i in range(40):
            n = 1 + i % 8
            m = (i * 5) % (2 * n + 1)
            m = min(m, n * (n - 1))
            d = gen_digraph(GenSpec("digraph-random", n=n, m=m, seed=900 + i))
            for bits in range(1 << n):
                s = [v for v in range(n) if bits >> v & 1]
                assert is_acyclic(d, s) == (not has_cycle(d, s))


class TestFindMonochromaticCycle:
    def test_two_cycle_same_color(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert find_monochromatic_cycle(d, Coloring((0, 0), 1)) == [0, 1]

    def test_two_cycle_split_colors(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert find_monochromatic_cycle(d, Coloring((0, 1), 2)) is None

    def test_gadget_all_one_color(self):
        g = TEMPLATE.as_digraph()
        cycle = find_monochromatic_cycle(g, Coloring((0,) * 6, 1))
        assert cycle is not None
        # shortest cycles of the gadget have length 3
        assert len(cycle) == min(len(c) for c in simple_cycles(g))
        assert len(cycle) == 3

    def test_partial_coloring_rejected(self):
        with pytest.raises(ValueError, match="covers"):
            find_monochromatic_cycle(Digraph(2, [(0, 1)]), Coloring((0,), 1))

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_returned_cycle_is_sound_and_shortest(self, data):
        d = data.draw(digraphs())
        c = data.draw(colorings_of(d))
        cycle = find_monochromatic_cycle(d, c)
        mono = [
            cy
            for cy in simple_cycles(d)
            if len({c[v] for v in cy}) == 1
        ]
        if cycle is None:
            assert not mono
        else:
            assert len(set(cycle)) == len(cycle)
            assert len({c[v] for v in cycle}) == 1
            for u, v in zip(cycle, cycle[1:] + cycle[:1]):
                assert d.has_arc(u, v)
            assert len(cycle) == min(len(cy) for cy in mono)


class TestVerifyDicoloring:
    def test_single_arc_one_color(self):
        assert verify_dicoloring(Digraph(2, [(0, 1)]), Coloring((0, 0), 1))

    def test_two_cycle_one_color(self):
        assert not verify_dicoloring(Digraph(2, [(0, 1), (1, 0)]), Coloring((0, 0), 1))

    def test_lifted_coloring_of_single_edge_reduction(self):
        from dicolor.reduction import lift_forward, reduce_hypergraph

        h = Hypergraph3(3, [(0, 1, 2)])
        psi = lift_forward(h, Coloring((0, 0, 1), 2))
        assert verify_dicoloring(reduce_hypergraph(h).graph, psi)

    @settings(max_examples=150, deadline=None)
    @given(st.data())
    def test_matches_cycle_search(self, data):
        d = data.draw(digraphs(max_n=6))
        c = data.draw(colorings_of(d))
        assert verify_dicoloring(d, c) == (find_monochromatic_cycle(d, c) is None)

    @settings(max_examples=80, deadline=None)
    @given(st.data())
    def test_all_distinct_colors_always_verify(self, data):
        d = data.draw(digraphs(max_n=7))
        assert verify_dicoloring(d, Coloring(tuple(range(d.n)), d.n))


class TestSymmetrizationAcyclicity:
    def test_acyclic_in_symmetrization_iff_independent(self):
        # exhaustive over all undirected graphs on <= 5 vertices and all subsets
        for n in range(1, 6):
            pairs = list(itertools.combinations(range(n), 2))
            for bits in range(1 << len(pairs)):
                edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
                g = Graph(n, edges)
                dg = symmetrize(g)
                for sbits in range(1 << n):
                    s = {v for v in range(n) if sbits >> v & 1}
                    independent = not any(u in s and v in s for u, v in edges)
                    assert is_acyclic(dg, s) == independent


class TestVerifyHypercoloring:
    def test_single_edge(self):
        h = Hypergraph3(3, [(0, 1, 2)])
        assert verify_hypercoloring(h, Coloring((0, 0, 1), 2))
        assert not verify_hypercoloring(h, Coloring((1, 1, 1), 2))

    def test_rejects_wrong_color_count(self):
        h = Hypergraph3(3, [(0, 1, 2)])
        with pytest.raises(ValueError, match="2 colors"):
            verify_hypercoloring(h, Coloring((0, 1, 2), 3))

    def test_fano_rejects_every_coloring(self):
        h = fano()
        for bits in range(1 << 7):
            c = Coloring(tuple(bits >> v & 1 for v in range(7)), 2)
            assert not verify_hypercoloring(h, c)
