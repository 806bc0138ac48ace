"""Vertex-bottleneck verification over forest-weight products.

For any triple (i, j, k) the product of forest weights (i rooted-at j)
times (j rooted-at k) never exceeds (i rooted-at k) times (j rooted-at j),
and the two sides are equal exactly when every directed path from i to k
passes through j (j is a separator, possibly vacuously when k is
unreachable). This module classifies all triples and cross-checks the
algebraic relation against an independent reachability test.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import InconsistentWithTheoremError, VertexOutOfRangeError
from .forest import ForestMatrices, forest_matrices
from .graph import MultiDigraph
from .matrix import EXACT, Scalar

RELATION_EQUAL = "equal"
RELATION_STRICT = "strict"

# Relative tolerance for classifying equality in float mode; exact mode
# compares exactly and is authoritative.
FLOAT_EQUALITY_RTOL = 1e-9


@dataclass(frozen=True)
class BottleneckReport:
    """Verdict for one ordered triple (i, j, k).

    ``lhs`` and ``rhs`` are the two forest-weight products, ``relation``
    their exact (or tolerance-based) comparison, ``separator`` the
    independent path-condition verdict, and ``consistent`` whether the two
    verdicts agree as the theory requires. Triples with j among the
    endpoints or with i = k exercise conventions rather than content and
    are flagged ``degenerate``.
    """

    triple: tuple[int, int, int]
    lhs: Scalar
    rhs: Scalar
    relation: str
    separator: bool
    consistent: bool
    degenerate: bool


class TripleSummary(NamedTuple):
    total: int
    equal: int
    strict: int
    degenerate: int
    inconsistent: int


def _separates(i: int, j: int, k: int, reachable_without_j: frozenset[int]) -> bool:
    # Endpoints lie on every path; the zero-length path from i to i
    # contains only i, so no other vertex can separate i from itself.
    if j == i or j == k:
        return True
    if i == k:
        return False
    return k not in reachable_without_j


def is_bottleneck(graph: MultiDigraph, i: int, j: int, k: int) -> bool:
    """True when every directed path from i to k contains j."""
    for v in (i, j, k):
        if not (0 <= v < graph.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{graph.n - 1}")
    if j == i or j == k:
        return True
    if i == k:
        return False
    return k not in graph.reachable(i, excluded=j)


def check_triple(
    forests: ForestMatrices, graph: MultiDigraph, i: int, j: int, k: int
) -> BottleneckReport:
    """Classify one triple and verify it against the separator test.

    In exact mode any violation (product inequality failing, or relation
    and separator disagreeing) raises
    :class:`InconsistentWithTheoremError`, since it can only mean an
    implementation bug. Float mode records the verdict tolerantly and
    leaves judgment to the caller.
    """
    weights = forests.matrix
    lhs = weights[i, j] * weights[j, k]
    rhs = weights[i, k] * weights[j, j]
    separator = is_bottleneck(graph, i, j, k)
    if forests.mode == EXACT:
        if lhs > rhs:
            raise InconsistentWithTheoremError(
                f"triple {(i, j, k)}: product {lhs} exceeds {rhs}"
            )
        relation = RELATION_EQUAL if lhs == rhs else RELATION_STRICT
    else:
        close = abs(lhs - rhs) <= FLOAT_EQUALITY_RTOL * max(1.0, abs(rhs))
        relation = RELATION_EQUAL if close else RELATION_STRICT
    consistent = (relation == RELATION_EQUAL) == separator
    if forests.mode == EXACT and not consistent:
        raise InconsistentWithTheoremError(
            f"triple {(i, j, k)}: relation {relation} but separator is {separator}"
        )
    return BottleneckReport(
        triple=(i, j, k),
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        separator=separator,
        consistent=consistent,
        degenerate=j in (i, k) or i == k,
    )


def verify_all_triples(
    graph: MultiDigraph,
    forests: Optional[ForestMatrices] = None,
    mode: str = EXACT,
) -> list[BottleneckReport]:
    """Reports for all ordered triples, in lexicographic order."""
    if forests is None:
        forests = forest_matrices(graph, mode)
    n = graph.n
    # One reachability sweep per (source, excluded) pair; is_bottleneck
    # applies the same rule one triple at a time.
    reach = {
        (i, j): graph.reachable(i, excluded=j)
        for j in range(n)
        for i in range(n)
        if i != j
    }
    weights = forests.matrix
    exact = forests.mode == EXACT
    reports = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = weights[i, j] * weights[j, k]
                rhs = weights[i, k] * weights[j, j]
                separator = _separates(i, j, k, reach.get((i, j), frozenset()))
                if exact:
                    if lhs > rhs:
                        raise InconsistentWithTheoremError(
                            f"triple {(i, j, k)}: product {lhs} exceeds {rhs}"
                        )
                    relation = RELATION_EQUAL if lhs == rhs else RELATION_STRICT
                else:
                    close = abs(lhs - rhs) <= FLOAT_EQUALITY_RTOL * max(1.0, abs(rhs))
                    relation = RELATION_EQUAL if close else RELATION_STRICT
                consistent = (relation == RELATION_EQUAL) == separator
                if exact and not consistent:
                    raise InconsistentWithTheoremError(
                        f"triple {(i, j, k)}: relation {relation} but separator is {separator}"
                    )
                reports.append(
                    BottleneckReport(
                        triple=(i, j, k),
                        lhs=lhs,
                        rhs=rhs,
                        relation=relation,
                        separator=separator,
                        consistent=consistent,
                        degenerate=j in (i, k) or i == k,
                    )
                )
    return reports


def _undirected_separates(n: int, edges, i: int, j: int, k: int) -> bool:
    # Edge-based breadth-first search, independent of the arc doubling.
    if j == i or j == k:
        return True
    if i == k:
        return False
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v, _ in edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    seen = {i}
    queue = deque([i])
    while queue:
        v = queue.popleft()
        for w in neighbors[v]:
            if w == j or w in seen:
                continue
            seen.add(w)
            queue.append(w)
    return k not in seen


def verify_undirected(n: int, edges: Iterable, mode: str = EXACT) -> list[BottleneckReport]:
    """Verify all triples of an undirected multigraph.

    The graph is converted by replacing each edge with two opposite arcs;
    on top of the triple sweep this checks that the forest matrix is
    symmetric and that the undirected separator condition coincides with
    the directed one on the doubled digraph.
    """
    edges = tuple(edges)
    graph = MultiDigraph.from_undirected(n, edges)
    forests = forest_matrices(graph, mode)
    symmetric = forests.matrix.is_symmetric(
        0 if mode == EXACT else FLOAT_EQUALITY_RTOL * max(1.0, forests.matrix.max_abs())
    )
    if not symmetric:
        raise InconsistentWithTheoremError(
            "forest matrix of a doubled undirected graph must be symmetric"
        )
    reports = verify_all_triples(graph, forests, mode)
    for report in reports:
        i, j, k = report.triple
        if _undirected_separates(n, edges, i, j, k) != report.separator:
            raise InconsistentWithTheoremError(
                f"triple {(i, j, k)}: undirected and directed separator tests disagree"
            )
    return reports


def summarize(reports: Iterable[BottleneckReport]) -> TripleSummary:
    total = equal = strict = degenerate = inconsistent = 0
    for report in reports:
        total += 1
        if report.relation == RELATION_EQUAL:
            equal += 1
        else:
            strict += 1
        if report.degenerate:
            degenerate += 1
        if not report.consistent:
            inconsistent += 1
    return TripleSummary(total, equal, strict, degenerate, inconsistent)
