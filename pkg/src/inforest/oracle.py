"""Brute-force enumeration of spanning converging forests.

A spanning converging forest assigns each vertex either the role of a root
or exactly one of its outgoing arcs, such that following chosen arcs never
cycles. Enumerating all per-vertex choices and filtering the cyclic ones is
deliberately the simplest correct realization: this module is the ground
truth the algebraic computation is tested against, so transparency beats
speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .errors import InstanceTooLargeError
from .graph import MultiDigraph
from .matrix import EXACT, FLOAT, Matrix, Scalar

DEFAULT_CHOICE_CAP = 10_000_000


@dataclass(frozen=True)
class InForest:
    """One spanning converging forest.

    ``arc_choice[v]`` is the index (into the graph's arc list) of the arc
    leaving v, or None when v is a root. ``root_of[v]`` is the terminal
    vertex of v's successor chain.
    """

    arc_choice: tuple[Optional[int], ...]
    root_of: tuple[int, ...]
    weight: Scalar

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, choice in enumerate(self.arc_choice) if choice is None)


@dataclass(frozen=True)
class OracleResult:
    """Totals assembled from an exhaustive forest enumeration."""

    total_weight: Scalar
    matrix: Matrix
    forest_count: int


def choice_count(graph: MultiDigraph) -> int:
    """Number of per-vertex choice vectors the enumeration must scan."""
    return math.prod(graph.out_degree(v) + 1 for v in range(graph.n))


def _chain_roots(choice, heads, n) -> Optional[list[int]]:
    """Per-vertex roots of a successor choice, or None if the arcs cycle."""
    root = [-1] * n
    state = bytearray(n)  # 0 unvisited, 1 on the current chain, 2 resolved
    for start in range(n):
        if state[start] == 2:
            continue
        chain = []
        v = start
        while True:
            if state[v] == 2:
                terminal = root[v]
                break
            if state[v] == 1:
                return None
            state[v] = 1
            chain.append(v)
            arc = choice[v]
            if arc is None:
                terminal = v
                break
            v = heads[arc]
        for u in chain:
            state[u] = 2
            root[u] = terminal
    return root


def enumerate_in_forests(
    graph: MultiDigraph, cap: int = DEFAULT_CHOICE_CAP
) -> Iterator[InForest]:
    """Yield every spanning converging forest exactly once.

    Parallel arcs yield distinct forests. The arcless forest (all vertices
    roots, weight 1) comes first. Raises :class:`InstanceTooLargeError`
    before yielding anything when the choice space exceeds ``cap``.
    """
    total_choices = choice_count(graph)
    if total_choices > cap:
        raise InstanceTooLargeError(
            f"{total_choices} choice vectors exceed the enumeration cap {cap}"
        )
    exact = graph.has_rational_weights()
    one = Fraction(1) if exact else 1.0
    heads = [arc.head for arc in graph.arcs]
    weights = [Fraction(a.weight) if exact else float(a.weight) for a in graph.arcs]
    options = [(None,) + graph.out_arcs(v) for v in range(graph.n)]
    for choice in product(*options):
        root = _chain_roots(choice, heads, graph.n)
        if root is None:
            continue
        weight = one
        for arc in choice:
            if arc is not None:
                weight *= weights[arc]
        yield InForest(arc_choice=choice, root_of=tuple(root), weight=weight)


def oracle_matrices(graph: MultiDigraph, cap: int = DEFAULT_CHOICE_CAP) -> OracleResult:
    """Total forest weight and forest-weight matrix by direct enumeration."""
    mode = EXACT if graph.has_rational_weights() else FLOAT
    zero = Fraction(0) if mode == EXACT else 0.0
    total = zero
    count = 0
    rows = [[zero] * graph.n for _ in range(graph.n)]
    for forest in enumerate_in_forests(graph, cap=cap):
        total += forest.weight
        count += 1
        for v in range(graph.n):
            rows[v][forest.root_of[v]] += forest.weight
    return OracleResult(total_weight=total, matrix=Matrix(rows, mode), forest_count=count)
