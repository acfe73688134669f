import itertools

from ncdim import (
    Alphabet,
    MonomialSet,
    build_ufnarovski,
    classify_growth,
    count_paths,
    gk_dimension,
)
from ncdim.growth import emit_dot

AB = Alphabet(("x1", "x2"), (1, 1))
AB3 = Alphabet(("x1", "x2", "x3"), (1, 1, 1))
ONE = Alphabet(("x",), (1,))

DOWN_UP = MonomialSet(((0, 0, 1), (0, 1, 1)))
POWER2 = MonomialSet(((1, 1, 0),))


def brute_count_by_length(omega, n_letters, length):
    return sum(
        1
        for word in itertools.product(range(n_letters), repeat=length)
        if omega.is_normal(word)
    )


class TestBuildGraph:
    def test_down_up_graph(self):
        graph = build_ufnarovski(DOWN_UP, AB)
        assert graph.ell == 3
        assert set(graph.vertices) == {(0, 0), (0, 1), (1, 0), (1, 1)}
        assert set(graph.edges) == {
            ((0, 0), (0, 0), 0),
            ((0, 1), (1, 0), 0),
            ((1, 0), (0, 0), 0),
            ((1, 0), (0, 1), 1),
            ((1, 1), (1, 0), 0),
            ((1, 1), (1, 1), 1),
        }

    def test_power_two_graph(self):
        graph = build_ufnarovski(POWER2, AB)
        assert set(graph.vertices) == {(0, 0), (0, 1), (1, 0), (1, 1)}
        assert set(graph.edges) == {
            ((0, 0), (0, 0), 0),
            ((0, 0), (0, 1), 1),
            ((0, 1), (1, 0), 0),
            ((0, 1), (1, 1), 1),
            ((1, 0), (0, 0), 0),
            ((1, 0), (0, 1), 1),
            ((1, 1), (1, 1), 1),
        }

    def test_empty_obstructions_one_vertex_with_loops(self):
        omega = MonomialSet.interreduce([])
        graph = build_ufnarovski(omega, AB)
        assert graph.ell == 1
        assert graph.vertices == ((),)
        assert graph.edges == (((), (), 0), ((), (), 1))

    def test_dead_letter_drops_its_loop(self):
        graph = build_ufnarovski(MonomialSet(((0,),)), AB)
        assert graph.vertices == ((),)
        assert graph.edges == (((), (), 1),)

    def test_out_edges(self):
        graph = build_ufnarovski(DOWN_UP, AB)
        out = graph.out_edges()
        assert [e[2] for e in out[(1, 1)]] == [0, 1]
        assert out[(0, 1)] == [((0, 1), (1, 0), 0)]


class TestClassification:
    def test_down_up_polynomial_of_degree_three(self):
        growth = classify_growth(build_ufnarovski(DOWN_UP, AB))
        assert growth.is_polynomial and growth.degree == 3
        assert growth.witness is None

    def test_power_two_exponential(self):
        growth = classify_growth(build_ufnarovski(POWER2, AB))
        assert growth.exponential

    def test_free_on_two_letters_exponential_with_loop_witness(self):
        growth = classify_growth(build_ufnarovski(MonomialSet.interreduce([]), AB))
        assert growth.exponential
        assert growth.witness == ((((), (), 0),), (((), (), 1),))

    def test_free_on_one_letter_linear(self):
        growth = classify_growth(build_ufnarovski(MonomialSet.interreduce([]), ONE))
        assert growth.is_polynomial and growth.degree == 1

    def test_nilpotent_is_degree_zero(self):
        growth = classify_growth(build_ufnarovski(MonomialSet(((0, 0),)), ONE))
        assert growth.is_polynomial and growth.degree == 0

    def test_commutation_degree_equals_letter_count(self):
        omega = MonomialSet(((1, 0), (2, 0), (2, 1)))
        growth = classify_growth(build_ufnarovski(omega, AB3))
        assert growth.is_polynomial and growth.degree == 3

    def test_witness_cycles_share_a_vertex_and_differ(self):
        graph = build_ufnarovski(MonomialSet(((0, 0),)), AB3)
        growth = classify_growth(graph)
        assert growth.exponential
        first, second = growth.witness
        assert first != second
        edges = set(graph.edges)
        for cycle in (first, second):
            assert set(cycle) <= edges
            for edge, nxt in zip(cycle, cycle[1:]):
                assert edge[1] == nxt[0]
            assert cycle[-1][1] == cycle[0][0]
        assert first[0][0] == second[0][0]


class TestGkDimension:
    def test_examples(self):
        assert gk_dimension(DOWN_UP, AB) == 3
        assert gk_dimension(MonomialSet(((1, 0),)), AB) == 2
        assert gk_dimension(MonomialSet(((0, 0),)), ONE) == 0
        assert gk_dimension(MonomialSet(((0, 0),)), AB3) is None
        assert gk_dimension(POWER2, AB) is None


class TestPathCounts:
    def test_paths_count_normal_words_by_length(self):
        for omega in (DOWN_UP, POWER2, MonomialSet(((1, 0), (0, 0, 0)))):
            graph = build_ufnarovski(omega, AB)
            start = graph.ell - 1
            for length in range(start, 9):
                expected = brute_count_by_length(omega, 2, length)
                assert count_paths(graph, length - start) == expected

    def test_zero_edge_paths_count_vertices(self):
        graph = build_ufnarovski(DOWN_UP, AB)
        assert count_paths(graph, 0) == 4


class TestDot:
    def test_deterministic_and_keeps_parallel_edges(self):
        graph = build_ufnarovski(MonomialSet.interreduce([]), AB)
        dot = emit_dot(graph)
        assert dot == emit_dot(graph)
        assert dot.splitlines()[0] == "digraph growth {"
        assert dot.count('"1" -> "1";') == 2

    def test_letter_names_in_vertices(self):
        dot = emit_dot(build_ufnarovski(DOWN_UP, AB))
        assert '"x1*x2"' in dot
