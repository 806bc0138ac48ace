"""Shared graph builders, seeded corpora, and hypothesis strategies."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from inforest import MultiDigraph, complete_graph, cycle_graph, path_graph

CORPUS_SEED = 20260809


def make_path(a=1, b=1) -> MultiDigraph:
    """Three-vertex directed path 0 -> 1 -> 2 with arc weights a and b."""
    return MultiDigraph(3, [(0, 1, a), (1, 2, b)])


def make_triangle(w01=1, w12=1, w02=1) -> MultiDigraph:
    """Acyclic triangle: arcs 0->1, 1->2 and the chord 0->2."""
    return MultiDigraph(3, [(0, 1, w01), (1, 2, w12), (0, 2, w02)])


def make_two_cycle(a=1, b=1) -> MultiDigraph:
    return MultiDigraph(2, [(0, 1, a), (1, 0, b)])


def random_multidigraph(seed, min_n=2, max_n=5, max_arcs=8, weight_limit=5) -> MultiDigraph:
    """Seeded random multidigraph with parallel arcs allowed and rational
    weights p/q, p and q uniform in 1..weight_limit."""
    rng = random.Random(seed)
    n = rng.randint(min_n, max_n)
    arcs = []
    for _ in range(rng.randint(0, max_arcs)):
        tail = rng.randrange(n)
        head = rng.randrange(n - 1)
        if head >= tail:
            head += 1
        weight = Fraction(rng.randint(1, weight_limit), rng.randint(1, weight_limit))
        arcs.append((tail, head, weight))
    return MultiDigraph(n, arcs)


def random_undirected(seed, min_n=2, max_n=5, max_edges=6, weight_limit=5):
    """Seeded random undirected multigraph as (n, edge list)."""
    rng = random.Random(seed ^ 0x5EED)
    n = rng.randint(min_n, max_n)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        weight = Fraction(rng.randint(1, weight_limit), rng.randint(1, weight_limit))
        edges.append((u, v, weight))
    return n, edges


def corpus(count=200, base_seed=CORPUS_SEED, **kwargs):
    return [random_multidigraph(base_seed + i, **kwargs) for i in range(count)]


def fixture_graphs():
    return [
        path_graph(3),
        cycle_graph(3),
        cycle_graph(4),
        complete_graph(3),
        complete_graph(4),
        make_triangle(),
    ]


@st.composite
def multidigraphs(draw, max_n=4, max_arcs=6, weight_limit=4):
    n = draw(st.integers(2, max_n))
    arcs = []
    for _ in range(draw(st.integers(0, max_arcs))):
        tail = draw(st.integers(0, n - 1))
        head = draw(st.integers(0, n - 2))
        if head >= tail:
            head += 1
        weight = Fraction(draw(st.integers(1, weight_limit)), draw(st.integers(1, weight_limit)))
        arcs.append((tail, head, weight))
    return MultiDigraph(n, arcs)
