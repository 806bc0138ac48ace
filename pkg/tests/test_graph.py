"""Graph construction, matrix views, degrees, and reachability."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from inforest import (
    EXACT,
    FLOAT,
    LoopArcError,
    Matrix,
    MultiDigraph,
    NonPositiveWeightError,
    TooFewVerticesError,
    VertexOutOfRangeError,
)
from tests.helpers import make_path, make_triangle, multidigraphs


def test_isolated_vertices_are_legal():
    g = MultiDigraph(2, [])
    assert g.n == 2 and g.arcs == ()


def test_arc_order_preserved():
    g = make_path(2, 3)
    assert [(a.tail, a.head, a.weight) for a in g.arcs] == [(0, 1, 2), (1, 2, 3)]


def test_loop_arc_rejected():
    with pytest.raises(LoopArcError):
        MultiDigraph(2, [(0, 0, 1.0)])


def test_too_few_vertices_rejected():
    with pytest.raises(TooFewVerticesError):
        MultiDigraph(1, [])


@pytest.mark.parametrize("weight", [0, -1, Fraction(0), float("inf"), float("nan")])
def test_bad_weights_rejected(weight):
    with pytest.raises(NonPositiveWeightError):
        MultiDigraph(2, [(0, 1, weight)])


@pytest.mark.parametrize("arc", [(0, 2, 1), (2, 0, 1), (-1, 0, 1)])
def test_endpoints_out_of_range_rejected(arc):
    with pytest.raises(VertexOutOfRangeError):
        MultiDigraph(2, [arc])


def test_total_weight_matrix_sums_parallel_arcs():
    g = MultiDigraph(2, [(0, 1, 2), (0, 1, 3)])
    assert g.total_weight_matrix().to_lists() == [[0, 5], [0, 0]]


def test_total_weight_matrix_empty_graph():
    assert MultiDigraph(3, []).total_weight_matrix() == Matrix.zeros(3)


def test_total_weight_matrix_path():
    a, b = Fraction(2, 3), Fraction(5)
    g = make_path(a, b)
    assert g.total_weight_matrix().to_lists() == [[0, a, 0], [0, 0, b], [0, 0, 0]]


def test_laplacian_single_arc():
    a = Fraction(3, 2)
    g = MultiDigraph(2, [(0, 1, a)])
    assert g.laplacian().to_lists() == [[a, -a], [0, 0]]


def test_laplacian_empty_graph():
    assert MultiDigraph(2, []).laplacian() == Matrix.zeros(2)


def test_laplacian_triangle():
    assert make_triangle().laplacian().to_lists() == [
        [2, -1, -1],
        [0, 1, -1],
        [0, 0, 0],
    ]


def test_degrees_count_parallel_arcs():
    g = MultiDigraph(2, [(0, 1, 2), (0, 1, 3)])
    assert g.out_degree(0) == 2 and g.in_degree(0) == 0
    assert g.out_degree(1) == 0 and g.in_degree(1) == 2


def test_degrees_path_and_empty():
    g = make_path()
    assert g.out_degree(2) == 0 and g.in_degree(2) == 1
    empty = MultiDigraph(3, [])
    assert all(empty.out_degree(v) == empty.in_degree(v) == 0 for v in range(3))


def test_degree_vertex_out_of_range():
    with pytest.raises(VertexOutOfRangeError):
        make_path().out_degree(3)


def test_from_undirected_doubles_each_edge():
    g = MultiDigraph.from_undirected(2, [(0, 1, Fraction(1, 2))])
    assert {(a.tail, a.head, a.weight) for a in g.arcs} == {
        (0, 1, Fraction(1, 2)),
        (1, 0, Fraction(1, 2)),
    }


def test_from_undirected_empty():
    assert MultiDigraph.from_undirected(3, []).arcs == ()


def test_from_undirected_laplacian_symmetric():
    g = MultiDigraph.from_undirected(3, [(0, 1, 1), (1, 2, 1)])
    assert len(g.arcs) == 4
    assert g.laplacian().is_symmetric()


def test_reachable_respects_exclusion():
    g = make_path()
    assert g.reachable(0, excluded=1) == {0}
    assert g.reachable(0) == {0, 1, 2}
    assert make_triangle().reachable(0, excluded=1) == {0, 2}


def test_reachable_rejects_bad_arguments():
    g = make_path()
    with pytest.raises(VertexOutOfRangeError):
        g.reachable(5)
    with pytest.raises(ValueError):
        g.reachable(1, excluded=1)


def test_scaled_multiplies_weights():
    g = make_path(1, 2).scaled(Fraction(1, 3))
    assert [a.weight for a in g.arcs] == [Fraction(1, 3), Fraction(2, 3)]
    with pytest.raises(NonPositiveWeightError):
        g.scaled(0)


@given(multidigraphs())
def test_laplacian_rows_sum_to_zero(g):
    assert all(total == 0 for total in g.laplacian().row_sums())


@given(multidigraphs())
def test_weight_matrix_is_negated_off_diagonal_laplacian(g):
    weights = g.total_weight_matrix()
    lap = g.laplacian()
    for i in range(g.n):
        assert weights[i, i] == 0
        for j in range(g.n):
            if i != j:
                assert weights[i, j] == -lap[i, j]


@given(multidigraphs())
def test_degree_totals_match_arc_count(g):
    assert sum(g.out_degree(v) for v in range(g.n)) == len(g.arcs)
    assert sum(g.in_degree(v) for v in range(g.n)) == len(g.arcs)


@given(multidigraphs(max_n=4, max_arcs=4))
@settings(max_examples=50)
def test_reachability_monotone_under_arc_addition(g):
    extra = (0, g.n - 1, 1) if g.n > 1 else None
    bigger = MultiDigraph(g.n, list(g.arcs) + [extra])
    for source in range(g.n):
        assert g.reachable(source) <= bigger.reachable(source)


def test_float_laplacian_rows_near_zero():
    g = MultiDigraph(3, [(0, 1, 0.1), (0, 2, 0.7), (1, 2, 0.3)])
    lap = g.laplacian(FLOAT)
    assert all(abs(total) <= 1e-12 * max(1.0, lap.max_abs()) for total in lap.row_sums())
