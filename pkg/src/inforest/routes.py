"""Route weights of the loop-augmented walk graph.

Given a valid walk parameter ``eps`` (positive, with ``eps`` times the
largest total out-weight strictly below 1), the matrix ``I - eps * L`` is
row stochastic. Dividing it by ``1 + eps`` gives the total-arc-weight
matrix of a loop-augmented graph: each vertex gains a loop carrying its
diagonal entry, and every original arc keeps its endpoints with weight
scaled by ``eps / (1 + eps)``. Summing weights over all routes (arc walks,
loops allowed, one zero-length route per vertex) of every length converges
because each step contracts total weight by ``1 / (1 + eps)``; the sum is
proportional to the forest matrix, which is what makes route
decompositions usable to certify forest-weight identities.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

from .errors import (
    EpsilonOutOfRangeError,
    InconsistentWithTheoremError,
    InstanceTooLargeError,
    VertexOutOfRangeError,
)
from .forest import ForestMatrices
from .graph import MultiDigraph
from .matrix import (
    EXACT,
    FLOAT,
    Matrix,
    Scalar,
    geometric_series,
    invert,
    one_scalar,
    zero_scalar,
)

DEFAULT_TOLERANCE = 1e-12
DEFAULT_MAX_TERMS = 100_000
DEFAULT_ROUTE_CAP = 1_000_000

EpsilonValue = Union[Fraction, int, float]


def choose_epsilon(graph: MultiDigraph) -> EpsilonValue:
    """Default walk parameter: the midpoint 1/(2 * max out-weight).

    Any value with ``eps * max_out_weight < 1`` works; the midpoint keeps
    both series convergence and loop weights moderate. Arcless graphs put
    no constraint on eps, so 1 is returned by convention.
    """
    heaviest = graph.max_out_weight()
    if heaviest == 0:
        return Fraction(1)
    if isinstance(heaviest, Rational):
        return Fraction(1, 2) / Fraction(heaviest)
    return 0.5 / heaviest


def validate_epsilon(graph: MultiDigraph, eps: EpsilonValue) -> EpsilonValue:
    """Check ``0 < eps`` and ``eps * max out-weight < 1`` (strictly)."""
    if eps <= 0:
        raise EpsilonOutOfRangeError(f"epsilon must be positive, got {eps}")
    heaviest = graph.max_out_weight()
    if eps * heaviest >= 1:
        raise EpsilonOutOfRangeError(
            f"epsilon {eps} times max out-weight {heaviest} must stay below 1"
        )
    return eps


def stochastic_matrix(graph: MultiDigraph, eps: EpsilonValue, mode: str = EXACT) -> Matrix:
    """The row-stochastic matrix ``I - eps * L``."""
    validate_epsilon(graph, eps)
    lap = graph.laplacian(mode)
    result = Matrix.identity(graph.n, mode) - lap.scaled(eps)
    if mode == EXACT:
        assert all(total == 1 for total in result.row_sums())
    return result


def _step_matrix(graph: MultiDigraph, eps: EpsilonValue, mode: str) -> tuple[Matrix, Scalar]:
    """Total-arc-weight matrix of the loop-augmented graph and the per-step
    contraction ratio ``1 / (1 + eps)``."""
    if mode == EXACT:
        ratio = Fraction(1) / (1 + Fraction(eps))
    else:
        ratio = 1.0 / (1.0 + float(eps))
    return stochastic_matrix(graph, eps, mode).scaled(ratio), ratio


@dataclass(frozen=True)
class RouteMatrices:
    """Truncated route-weight sum together with its convergence evidence.

    ``tail_bound`` is a guaranteed upper bound on the max-abs truncation
    error of ``route_weights``: the last added term decays at least
    geometrically with ratio ``step_ratio`` from there on (row sums of the
    step matrix shrink exactly by that ratio each step). In float mode a
    small rounding allowance is folded in so the bound stays honest.
    """

    epsilon: EpsilonValue
    stochastic: Matrix
    step_weights: Matrix
    route_weights: Matrix
    terms_used: int
    tail_bound: Scalar


def route_matrix(
    graph: MultiDigraph,
    eps: Optional[EpsilonValue] = None,
    tolerance: float = DEFAULT_TOLERANCE,
    max_terms: int = DEFAULT_MAX_TERMS,
    mode: str = FLOAT,
    check_against: Optional[ForestMatrices] = None,
) -> RouteMatrices:
    """Sum the route-weight series of the loop-augmented graph.

    When ``check_against`` is given, the proportionality of the result to
    the forest matrices is asserted within ``tail_bound``.
    """
    if eps is None:
        eps = choose_epsilon(graph)
    step, ratio = _step_matrix(graph, eps, mode)
    series = geometric_series(step, tolerance, max_terms)
    tail = series.last_term_norm * ratio / (1 - ratio)
    if mode == FLOAT:
        # Accumulated rounding of terms_used float matrix additions.
        tail += (
            2.0
            * sys.float_info.epsilon
            * series.terms_used
            * (1.0 + series.total.max_abs())
        )
    result = RouteMatrices(
        epsilon=eps,
        stochastic=stochastic_matrix(graph, eps, mode),
        step_weights=step,
        route_weights=series.total,
        terms_used=series.terms_used,
        tail_bound=tail,
    )
    if check_against is not None:
        expected = expected_route_weights(check_against, eps).with_mode(mode)
        gap = (result.route_weights - expected).max_abs()
        if gap > tail:
            raise InconsistentWithTheoremError(
                f"route series deviates from forest matrices by {float(gap):.3e}, "
                f"beyond the guaranteed bound {float(tail):.3e}"
            )
    return result


def expected_route_weights(forests: ForestMatrices, eps: EpsilonValue) -> Matrix:
    """Closed-form route weights from forest matrices: (1 + 1/eps) times
    the proximity matrix."""
    if forests.mode == EXACT:
        factor = 1 + Fraction(1) / Fraction(eps)
    else:
        factor = 1.0 + 1.0 / float(eps)
    return forests.proximity.scaled(factor)


def closed_route_matrix(
    graph: MultiDigraph, eps: Optional[EpsilonValue] = None, mode: str = EXACT
) -> Matrix:
    """Route weights in closed form, inverting I minus the step matrix."""
    if eps is None:
        eps = choose_epsilon(graph)
    step, _ = _step_matrix(graph, eps, mode)
    return invert(Matrix.identity(graph.n, mode) - step)


def _loop_adjacency(graph: MultiDigraph, eps: EpsilonValue, mode: str):
    """Per-vertex outgoing (head, weight) pairs of the loop-augmented graph,
    keeping parallel arcs distinct; the loop comes first."""
    step = _step_matrix(graph, eps, mode)[0]
    if mode == EXACT:
        eps_s, one = Fraction(eps), Fraction(1)
    else:
        eps_s, one = float(eps), 1.0
    ratio = one / (one + eps_s)
    adjacency = []
    for v in range(graph.n):
        entries = [(v, step[v, v])]
        for index in graph.out_arcs(v):
            arc = graph.arcs[index]
            weight = Fraction(arc.weight) if mode == EXACT else float(arc.weight)
            entries.append((arc.head, ratio * eps_s * weight))
        adjacency.append(entries)
    return adjacency


def route_weights_by_length(
    graph: MultiDigraph,
    source: int,
    length: int,
    eps: Optional[EpsilonValue] = None,
    mode: str = EXACT,
    cap: int = DEFAULT_ROUTE_CAP,
) -> list[Scalar]:
    """Explicitly enumerate all routes of exactly ``length`` arcs from
    ``source`` in the loop-augmented graph; return summed weights per
    endpoint.

    Must agree exactly (in exact mode) with the corresponding row of the
    step matrix raised to ``length``; that equality is what the tests
    check. Raises :class:`InstanceTooLargeError` when more than ``cap``
    routes would be visited.
    """
    if not (0 <= source < graph.n):
        raise VertexOutOfRangeError(f"vertex {source} outside 0..{graph.n - 1}")
    if length < 0:
        raise ValueError("route length must be nonnegative")
    if eps is None:
        eps = choose_epsilon(graph)
    adjacency = _loop_adjacency(graph, eps, mode)
    totals = [zero_scalar(mode)] * graph.n
    visited = 0

    def walk(vertex, remaining, accumulated):
        nonlocal visited
        if remaining == 0:
            visited += 1
            if visited > cap:
                raise InstanceTooLargeError(
                    f"more than {cap} routes of length {length} from vertex {source}"
                )
            totals[vertex] += accumulated
            return
        for head, weight in adjacency[vertex]:
            walk(head, remaining - 1, accumulated * weight)

    walk(source, length, one_scalar(mode))
    return totals


def route_weight_by_length(
    graph: MultiDigraph,
    source: int,
    target: int,
    length: int,
    eps: Optional[EpsilonValue] = None,
    mode: str = EXACT,
    cap: int = DEFAULT_ROUTE_CAP,
) -> Scalar:
    """Summed weight of the routes of exactly ``length`` arcs between two
    vertices of the loop-augmented graph."""
    if not (0 <= target < graph.n):
        raise VertexOutOfRangeError(f"vertex {target} outside 0..{graph.n - 1}")
    return route_weights_by_length(graph, source, length, eps=eps, mode=mode, cap=cap)[target]


@dataclass(frozen=True)
class RouteDecomposition:
    """Route-weight split of the triple (start, via, end).

    The route weight from start to end splits into routes through ``via``
    and routes avoiding it; routes through ``via`` factor as the weight of
    start-to-via routes visiting ``via`` once times the weight of
    via-to-end routes. Triples with ``via`` equal to an endpoint are
    flagged degenerate: every route contains its endpoints, so the
    avoiding weight is zero by convention and the identities hold
    trivially.
    """

    start: int
    via: int
    end: int
    start_via: Scalar
    via_via: Scalar
    via_end: Scalar
    start_end: Scalar
    start_via_once: Scalar
    through_via: Scalar
    avoiding_via: Scalar
    degenerate: bool


def route_decomposition(
    graph: MultiDigraph,
    start: int,
    via: int,
    end: int,
    eps: Optional[EpsilonValue] = None,
    mode: str = EXACT,
) -> RouteDecomposition:
    """Decompose closed-form route weights over the triple (start, via, end).

    The avoiding weight is the (start, end) route weight of the
    loop-augmented graph restricted to the vertices other than ``via``
    (dropping a vertex removes exactly the routes that touch it).
    """
    for v in (start, via, end):
        if not (0 <= v < graph.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{graph.n - 1}")
    if eps is None:
        eps = choose_epsilon(graph)
    step, _ = _step_matrix(graph, eps, mode)
    full = invert(Matrix.identity(graph.n, mode) - step)
    degenerate = via in (start, end)
    if degenerate:
        avoiding = zero_scalar(mode)
    else:
        keep = [v for v in range(graph.n) if v != via]
        reduced = invert(Matrix.identity(graph.n - 1, mode) - step.submatrix(keep))
        avoiding = reduced[keep.index(start), keep.index(end)]
    start_via = full[start, via]
    via_via = full[via, via]
    via_end = full[via, end]
    start_end = full[start, end]
    return RouteDecomposition(
        start=start,
        via=via,
        end=end,
        start_via=start_via,
        via_via=via_via,
        via_end=via_end,
        start_end=start_end,
        start_via_once=start_via / via_via,
        through_via=start_end - avoiding,
        avoiding_via=avoiding,
        degenerate=degenerate,
    )
