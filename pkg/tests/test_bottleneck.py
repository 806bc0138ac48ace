"""Triple classification against the separator test."""

from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings

from inforest import (
    EXACT,
    FLOAT,
    RELATION_EQUAL,
    RELATION_STRICT,
    InconsistentWithTheoremError,
    Matrix,
    MultiDigraph,
    check_triple,
    closed_route_matrix,
    forest_matrices,
    is_bottleneck,
    summarize,
    verify_all_triples,
    verify_undirected,
    VertexOutOfRangeError,
)
from tests.helpers import make_path, make_triangle, multidigraphs


def test_check_triple_path_equality():
    g = make_path()
    report = check_triple(forest_matrices(g), g, 0, 1, 2)
    assert report.lhs == 2 and report.rhs == 2
    assert report.relation == RELATION_EQUAL
    assert report.separator and report.consistent and not report.degenerate


def test_check_triple_triangle_strict():
    g = make_triangle()
    report = check_triple(forest_matrices(g), g, 0, 1, 2)
    assert report.lhs == 3 and report.rhs == 9
    assert report.relation == RELATION_STRICT
    assert not report.separator and report.consistent


def test_check_triple_empty_graph_vacuous_equality():
    g = MultiDigraph(3, [])
    report = check_triple(forest_matrices(g), g, 0, 1, 2)
    assert report.lhs == 0 and report.rhs == 0
    assert report.relation == RELATION_EQUAL and report.separator


def test_is_bottleneck_cases():
    path, triangle = make_path(), make_triangle()
    assert is_bottleneck(path, 0, 1, 2)
    assert not is_bottleneck(triangle, 0, 1, 2)
    # No path from 2 to 0 exists, so the condition holds vacuously.
    assert is_bottleneck(path, 2, 1, 0)
    # Endpoints lie on every path; only i itself separates i from i.
    assert is_bottleneck(triangle, 0, 0, 2) and is_bottleneck(triangle, 0, 2, 2)
    assert not is_bottleneck(triangle, 0, 1, 0)
    assert is_bottleneck(triangle, 0, 0, 0)
    with pytest.raises(VertexOutOfRangeError):
        is_bottleneck(path, 0, 1, 7)


def test_verify_counts_frozen_fixtures():
    # Splits confirmed against the enumeration oracle plus an independent
    # reachability recount before freezing.
    assert summarize(verify_all_triples(make_triangle()))[:3] == (27, 18, 9)
    assert summarize(verify_all_triples(make_path()))[:3] == (27, 19, 8)
    assert summarize(verify_all_triples(MultiDigraph(3, [])))[:3] == (27, 21, 6)


def test_verify_reports_are_ordered_and_consistent():
    reports = verify_all_triples(make_triangle())
    assert len(reports) == 27
    assert reports[0].triple == (0, 0, 0)
    assert all(r.consistent for r in reports)
    counts = summarize(reports)
    assert counts.degenerate == 21 and counts.inconsistent == 0


def test_check_triple_matches_sweep():
    g = make_triangle()
    forests = forest_matrices(g)
    for report in verify_all_triples(g, forests):
        single = check_triple(forests, g, *report.triple)
        assert single == report


def test_doctored_forest_matrix_raises():
    g = make_path()
    forests = forest_matrices(g)
    rows = forests.matrix.to_lists()
    rows[0][1] += 100  # breaks the product inequality
    doctored = replace(forests, matrix=Matrix(rows))
    with pytest.raises(InconsistentWithTheoremError):
        check_triple(doctored, g, 0, 1, 2)


def test_verdicts_invariant_under_weight_scaling():
    g = make_triangle(Fraction(1, 2), 2, Fraction(3, 5))
    base = [r.relation for r in verify_all_triples(g)]
    for t in (2, Fraction(1, 3)):
        scaled = [r.relation for r in verify_all_triples(g.scaled(t))]
        assert scaled == base


def test_float_mode_matches_exact_on_triangle():
    g = make_triangle()
    exact = [r.relation for r in verify_all_triples(g, mode=EXACT)]
    floaty = [r.relation for r in verify_all_triples(g, mode=FLOAT)]
    assert exact == floaty
    assert all(r.consistent for r in verify_all_triples(g, mode=FLOAT))


def test_verify_undirected_path_and_triangle():
    path_reports = verify_undirected(3, [(0, 1, 1), (1, 2, 1)])
    by_triple = {r.triple: r for r in path_reports}
    assert by_triple[(0, 1, 2)].relation == RELATION_EQUAL
    tri_reports = verify_undirected(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    by_triple = {r.triple: r for r in tri_reports}
    assert by_triple[(0, 1, 2)].relation == RELATION_STRICT


def test_verify_undirected_single_edge_consistent():
    reports = verify_undirected(2, [(0, 1, Fraction(2, 7))])
    assert all(r.consistent for r in reports)


def test_verify_undirected_matches_doubled_digraph():
    edges = [(0, 1, 1), (1, 2, Fraction(1, 2)), (0, 2, 3)]
    doubled = MultiDigraph.from_undirected(3, edges)
    assert verify_undirected(3, edges) == verify_all_triples(doubled)


def test_route_products_agree_with_forest_products():
    # The closed-form route matrix is computed through a different inverse,
    # so comparing verdicts checks the proportionality end to end.
    for g in (make_path(), make_triangle()):
        routes = closed_route_matrix(g)
        for report in verify_all_triples(g):
            i, j, k = report.triple
            route_equal = routes[i, j] * routes[j, k] == routes[i, k] * routes[j, j]
            assert route_equal == (report.relation == RELATION_EQUAL)


@given(multidigraphs())
@settings(max_examples=50, deadline=None)
def test_sweep_never_inconsistent(g):
    counts = summarize(verify_all_triples(g))
    assert counts.inconsistent == 0
    assert counts.total == g.n ** 3
