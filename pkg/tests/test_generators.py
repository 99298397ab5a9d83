import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dicolor.core import Digraph, Hypergraph3
from dicolor.generators import (
    FANO_EDGES,
    GenSpec,
    SplitMix64,
    dicycle,
    fano,
    gen_digraph,
    gen_hypergraph,
    gen_tournament,
    named_instance,
)
from dicolor.reduction import GADGET_ARCS
from dicolor.solvers import dichromatic_number


class TestSplitMix64:
    def test_reference_outputs_for_seed_zero(self):
        # first outputs of the published splitmix64 stream for seed 0
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_same_seed_same_stream(self):
        a, b = SplitMix64(1234567), SplitMix64(1234567)
        assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]

    def test_below_rejects_nonpositive_bound(self):
        with pytest.raises(ValueError):
            SplitMix64(1).below(0)


class TestGenSpec:
    def test_random_models_require_seed(self):
        with pytest.raises(ValueError, match="requires a seed"):
            GenSpec("h3-random", n=5, m=2)

    def test_named_requires_name(self):
        with pytest.raises(ValueError, match="requires a name"):
            GenSpec("named")

    def test_unknown_model(self):
        with pytest.raises(ValueError, match="unknown model"):
            GenSpec("erdos-renyi", n=5, m=2, seed=1)

    def test_circulant_tournament_needs_no_seed(self):
        GenSpec("tournament-random", n=3, circulant=(1,))


class TestGenHypergraph:
    def test_only_possible_triple(self):
        h = gen_hypergraph(GenSpec("h3-random", n=3, m=1, seed=777))
        assert h.sorted_edges == ((0, 1, 2),)

    def test_frozen_instance_n7_m7_seed42(self):
        h = gen_hypergraph(GenSpec("h3-random", n=7, m=7, seed=42))
        assert h.sorted_edges == (
            (0, 1, 4),
            (0, 1, 5),
            (0, 3, 6),
            (1, 3, 5),
            (2, 3, 5),
            (2, 4, 6),
            (3, 4, 5),
        )

    def test_too_many_edges_rejected(self):
        with pytest.raises(ValueError, match="cannot place"):
            gen_hypergraph(GenSpec("h3-random", n=4, m=5, seed=1))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(3, 8), st.integers(0, 6), st.integers(0, 2**40))
    def test_reproducible_and_well_formed(self, n, m_raw, seed):
        from math import comb

        m = m_raw % (comb(n, 3) + 1)
        spec = GenSpec("h3-random", n=n, m=m, seed=seed)
        h1, h2 = gen_hypergraph(spec), gen_hypergraph(spec)
        assert h1 == h2
        assert len(h1.edges) == m


class TestGenDigraph:
    def test_frozen_instance_n8_m20_seed7(self):
        d = gen_digraph(GenSpec("digraph-random", n=8, m=20, seed=7))
        assert d.sorted_arcs == (
            (0, 1), (0, 2), (0, 4), (0, 5), (1, 3),
            (2, 0), (2, 1), (2, 3), (2, 6), (2, 7),
            (3, 4), (5, 0), (5, 7), (6, 0), (6, 2),
            (6, 7), (7, 3), (7, 4), (7, 5), (7, 6),
        )

    def test_too_many_arcs_rejected(self):
        with pytest.raises(ValueError, match="cannot place"):
            gen_digraph(GenSpec("digraph-random", n=3, m=7, seed=1))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 20), st.integers(0, 2**40))
    def test_reproducible_and_well_formed(self, n, m_raw, seed):
        m = m_raw % (n * (n - 1) + 1)
        spec = GenSpec("digraph-random", n=n, m=m, seed=seed)
        d1, d2 = gen_digraph(spec), gen_digraph(spec)
        assert d1 == d2
        assert len(d1.arcs) == m


class TestGenTournament:
    def test_two_vertices_single_arc(self):
        d = gen_tournament(GenSpec("tournament-random", n=2, seed=5))
        assert len(d.arcs) == 1

    def test_one_arc_per_pair(self):
        d = gen_tournament(GenSpec("tournament-random", n=6, seed=11))
        for i, j in itertools.combinations(range(6), 2):
            assert d.has_arc(i, j) != d.has_arc(j, i)

    def test_circulant_three_is_directed_triangle(self):
        d = gen_tournament(GenSpec("tournament-random", n=3, circulant=(1,)))
        assert d.sorted_arcs == ((0, 1), (1, 2), (2, 0))
        assert dichromatic_number(d)[0] == 2

    def test_circulant_seven_dichromatic_number(self):
        # regression constant established by dicolorable_brute, not literature
        d = gen_tournament(GenSpec("tournament-random", n=7, circulant=(1, 2, 4)))
        assert dichromatic_number(d)[0] == 3

    def test_circulant_requires_odd_order(self):
        with pytest.raises(ValueError, match="odd"):
            gen_tournament(GenSpec("tournament-random", n=4, circulant=(1, 2)))

    def test_circulant_rejects_bad_connection_set(self):
        with pytest.raises(ValueError, match="exactly one"):
            gen_tournament(GenSpec("tournament-random", n=5, circulant=(1, 4)))


class TestNamedInstances:
    def test_fano_incidence_properties(self):
        h = fano()
        assert h.n == 7 and len(h.edges) == 7
        degree = [0] * 7
        for edge in h.edges:
            for v in edge:
                degree[v] += 1
        assert degree == [3] * 7
        for e1, e2 in itertools.combinations(h.sorted_edges, 2):
            assert len(set(e1) & set(e2)) == 1

    def test_dicycle(self):
        assert named_instance("dicycle-5").sorted_arcs == (
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        )
        with pytest.raises(ValueError):
            dicycle(1)

    def test_gadget(self):
        g = named_instance("gadget")
        assert isinstance(g, Digraph) and g.n == 6 and len(g.arcs) == 12
        order = ("a", "b", "c", "a'", "b'", "c'")
        index = {label: i for i, label in enumerate(order)}
        assert g.arcs == frozenset((index[u], index[v]) for u, v in GADGET_ARCS)

    def test_complete_k4(self):
        d = named_instance("complete-k4")
        assert d.n == 4 and len(d.arcs) == 12

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown named instance"):
            named_instance("petersen-cubed")

    def test_fano_equals_module_constant(self):
        assert fano() == Hypergraph3(7, FANO_EDGES)
