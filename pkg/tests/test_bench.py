from dicolor.bench import (
    BenchRow,
    chromatic_number_brute,
    digraph_corpus,
    hypergraph_exhaustive_family,
    hypergraph_random_corpus,
    rows_to_csv,
    run_suite,
    undirected_exhaustive_family,
    undirected_random_corpus,
)
from dicolor.core import Graph


class TestCorpora:
    def test_digraph_corpus_is_deterministic(self):
        assert digraph_corpus(count=25) == digraph_corpus(count=25)

    def test_digraph_corpus_size_and_bounds(self):
        corpus = digraph_corpus(count=500, max_n=10)
        assert len(corpus) == 500
        assert all(d.n <= 10 for _, d in corpus)

    def test_hypergraph_random_corpus_bounds(self):
        corpus = hypergraph_random_corpus(count=300, max_n=7, max_m=5)
        assert len(corpus) == 300
        assert all(h.n <= 7 and len(h.edges) <= 5 for _, h in corpus)

    def test_exhaustive_family_counts(self):
        # n=0,1,2 contribute one empty hypergraph each; 2^1 at n=3, 2^4 at
        # n=4, 2^10 at n=5
        family = hypergraph_exhaustive_family(max_n=5)
        assert len(family) == 3 + 2 + 16 + 1024

    def test_undirected_families(self):
        assert len(undirected_exhaustive_family(max_n=4)) == 1 + 2 + 8 + 64
        corpus = undirected_random_corpus(count=10, n=6)
        assert len(corpus) == 10 and all(g.n == 6 for _, g in corpus)


class TestChromaticNumber:
    def test_known_values(self):
        k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        bipartite = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        assert chromatic_number_brute(Graph(3)) == 1
        assert chromatic_number_brute(k4) == 4
        assert chromatic_number_brute(c5) == 3
        assert chromatic_number_brute(bipartite) == 2


class TestCsv:
    def test_rows_sorted_with_header(self):
        rows = (
            BenchRow("b", "dicolor", 2, "brute", "COLORABLE", 1),
            BenchRow("a", "dicolor", 3, "cegar", "COLORABLE", 2, 4, 3),
            BenchRow("a", "dicolor", 2, "brute", "NOT-COLORABLE", 0),
        )
        lines = rows_to_csv(rows).splitlines()
        assert lines[0] == "instance,problem,k,method,verdict,millis,iterations,clauses_added"
        assert lines[1] == "a,dicolor,2,brute,NOT-COLORABLE,0,0,0"
        assert lines[2] == "a,dicolor,3,cegar,COLORABLE,2,4,3"
        assert lines[3] == "b,dicolor,2,brute,COLORABLE,1,0,0"


class TestFanoSuite:
    def test_fano_pipeline_agrees(self):
        result = run_suite("fano-pipeline")
        assert result.ok and len(result.rows) == 4
