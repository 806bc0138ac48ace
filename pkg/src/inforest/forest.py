"""Spanning-converging-forest matrices of a multidigraph.

For a graph with Laplacian ``L`` the matrix ``I + L`` is always invertible;
its inverse, row-normalized to sum 1, is a proximity matrix whose entry
(i, j) is the fraction of total forest weight carried by forests that put
vertex i in a tree rooted at j. Scaling by the total forest weight (the
determinant of ``I + L``) yields the matrix of raw forest weights. The
brute-force enumeration in :mod:`inforest.oracle` realizes the same values
combinatorially and serves as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentWithTheoremError, SingularMatrixError
from .graph import MultiDigraph
from .matrix import EXACT, Matrix, Scalar, determinant, invert


@dataclass(frozen=True)
class ForestMatrices:
    """Total forest weight, forest-weight matrix, and proximity matrix.

    ``matrix[i, j]`` is the total weight of spanning converging forests
    having vertex i in a tree rooted at j; rows sum to ``total_weight``.
    ``proximity`` is ``matrix`` divided by ``total_weight``; rows sum to 1.
    """

    total_weight: Scalar
    matrix: Matrix
    proximity: Matrix
    mode: str


def forest_matrices(graph: MultiDigraph, mode: str = EXACT) -> ForestMatrices:
    """Compute the forest matrices from the graph's Laplacian."""
    shifted = Matrix.identity(graph.n, mode) + graph.laplacian(mode)
    try:
        proximity = invert(shifted)
    except SingularMatrixError as exc:
        # Impossible for a valid graph; inversion failing means a bug.
        raise InconsistentWithTheoremError(
            "identity-plus-Laplacian reported singular; this must never happen"
        ) from exc
    total = determinant(shifted)
    return ForestMatrices(
        total_weight=total,
        matrix=proximity.scaled(total),
        proximity=proximity,
        mode=mode,
    )


def proximity(graph: MultiDigraph, mode: str = EXACT) -> Matrix:
    """Row-stochastic proximity matrix (the normalized forest matrix)."""
    return forest_matrices(graph, mode).proximity
