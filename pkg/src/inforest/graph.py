"""Weighted directed multigraphs and their matrix views.

Vertices are dense 0-based indices (file formats and the CLI are 1-based).
Parallel arcs are stored individually; total weights are summed only where
a matrix view needs them, so enumeration over individual arcs and algebra
over summed weights can be cross-checked against each other.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Optional, Union

from .errors import (
    LoopArcError,
    NonPositiveWeightError,
    TooFewVerticesError,
    VertexOutOfRangeError,
)
from .matrix import EXACT, Matrix, zero_scalar

Weight = Union[Fraction, int, float]


class Arc(NamedTuple):
    """One weighted arc. Parallel arcs between the same endpoints are distinct."""

    tail: int
    head: int
    weight: Weight


def _check_weight(weight: Weight) -> Weight:
    if isinstance(weight, float) and not math.isfinite(weight):
        raise NonPositiveWeightError(f"arc weight must be finite, got {weight!r}")
    if not isinstance(weight, (int, float, Rational)):
        raise NonPositiveWeightError(f"arc weight must be a number, got {type(weight).__name__}")
    if weight <= 0:
        raise NonPositiveWeightError(f"arc weight must be positive, got {weight}")
    return weight


class MultiDigraph:
    """Loop-free weighted directed multigraph on vertices ``0..n-1``.

    Immutable after construction; all derived views are pure functions of
    the vertex count and the arc list, so instances are safe to share.
    """

    __slots__ = ("n", "arcs", "_out", "_in_degree")

    def __init__(self, n: int, arcs: Iterable = ()):
        if n < 2:
            raise TooFewVerticesError(f"graphs need at least 2 vertices, got {n}")
        self.n = n
        checked = []
        out: list[list[int]] = [[] for _ in range(n)]
        in_degree = [0] * n
        for index, raw in enumerate(arcs):
            tail, head, weight = raw
            if not (0 <= tail < n):
                raise VertexOutOfRangeError(f"arc tail {tail} outside 0..{n - 1}")
            if not (0 <= head < n):
                raise VertexOutOfRangeError(f"arc head {head} outside 0..{n - 1}")
            if tail == head:
                raise LoopArcError(f"arc {tail}->{head} is a loop")
            checked.append(Arc(tail, head, _check_weight(weight)))
            out[tail].append(index)
            in_degree[head] += 1
        self.arcs = tuple(checked)
        self._out = tuple(tuple(indices) for indices in out)
        self._in_degree = tuple(in_degree)

    @classmethod
    def from_undirected(cls, n: int, edges: Iterable) -> "MultiDigraph":
        """Build the digraph that replaces every edge by two opposite arcs."""
        arcs = []
        for tail, head, weight in edges:
            arcs.append((tail, head, weight))
            arcs.append((head, tail, weight))
        return cls(n, arcs)

    def _check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    def out_arcs(self, v: int) -> tuple[int, ...]:
        """Indices into ``arcs`` of the arcs leaving ``v``."""
        return self._out[self._check_vertex(v)]

    def out_degree(self, v: int) -> int:
        return len(self._out[self._check_vertex(v)])

    def in_degree(self, v: int) -> int:
        return self._in_degree[self._check_vertex(v)]

    def has_rational_weights(self) -> bool:
        return all(isinstance(arc.weight, Rational) for arc in self.arcs)

    def total_weight_matrix(self, mode: str = EXACT) -> Matrix:
        """Entry (i, j): sum of the weights of all arcs from i to j."""
        zero = zero_scalar(mode)
        rows = [[zero] * self.n for _ in range(self.n)]
        convert = Fraction if mode == EXACT else float
        for arc in self.arcs:
            rows[arc.tail][arc.head] += convert(arc.weight)
        return Matrix(rows, mode)

    def laplacian(self, mode: str = EXACT) -> Matrix:
        """Row-sum-zero matrix: diagonal holds total out-weights, off-diagonal
        entries are negated total arc weights."""
        weights = self.total_weight_matrix(mode).to_lists()
        zero = zero_scalar(mode)
        rows = []
        for i in range(self.n):
            diagonal = sum(weights[i], zero)
            row = [-w for w in weights[i]]
            row[i] = diagonal
            rows.append(row)
        return Matrix(rows, mode)

    def max_out_weight(self) -> Weight:
        """Largest total out-weight over all vertices (the largest Laplacian
        diagonal entry); exact whenever the arc weights are rational."""
        totals = [0] * self.n
        for arc in self.arcs:
            totals[arc.tail] = totals[arc.tail] + arc.weight
        return max(totals)

    def reachable(self, source: int, excluded: Optional[int] = None) -> frozenset[int]:
        """Vertices reachable from ``source`` along directed paths that never
        visit ``excluded``; the source itself is always included."""
        self._check_vertex(source)
        if excluded is not None:
            self._check_vertex(excluded)
            if excluded == source:
                raise ValueError("source cannot be the excluded vertex")
        seen = {source}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for index in self._out[v]:
                head = self.arcs[index].head
                if head == excluded or head in seen:
                    continue
                seen.add(head)
                queue.append(head)
        return frozenset(seen)

    def scaled(self, factor: Weight) -> "MultiDigraph":
        """Copy of the graph with every arc weight multiplied by ``factor``."""
        _check_weight(factor)
        return MultiDigraph(
            self.n, [(a.tail, a.head, a.weight * factor) for a in self.arcs]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiDigraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"MultiDigraph(n={self.n}, arcs={list(self.arcs)!r})"
