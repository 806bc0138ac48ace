"""Dense square matrices over exact rationals or IEEE doubles.

The exact mode stores ``fractions.Fraction`` entries so that determinants,
inverses and series sums are computed without rounding; the float mode
stores plain doubles. A scalar mode is fixed when a matrix is built and
binary operations never mix modes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import NotConvergedError, SingularMatrixError

EXACT = "exact"
FLOAT = "float"

Scalar = Union[Fraction, float]

# Relative pivot threshold below which float elimination treats the matrix
# as singular. Exact mode tests pivots against zero exactly.
FLOAT_PIVOT_RTOL = 1e-12


def _coerce(value, mode: str) -> Scalar:
    if mode == EXACT:
        return value if type(value) is Fraction else Fraction(value)
    return float(value)


def zero_scalar(mode: str) -> Scalar:
    return Fraction(0) if mode == EXACT else 0.0


def one_scalar(mode: str) -> Scalar:
    return Fraction(1) if mode == EXACT else 1.0


class Matrix:
    """Immutable square matrix whose entries all live in one scalar mode."""

    __slots__ = ("order", "mode", "_rows")

    def __init__(self, rows: Iterable[Sequence], mode: str = EXACT):
        if mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown scalar mode {mode!r}")
        data = [[_coerce(value, mode) for value in row] for row in rows]
        if any(len(row) != len(data) for row in data):
            raise ValueError("matrix must be square")
        self.order = len(data)
        self.mode = mode
        self._rows = data

    @classmethod
    def _wrap(cls, rows: list[list[Scalar]], mode: str) -> "Matrix":
        # Internal fast path: entries are already of the right type.
        matrix = cls.__new__(cls)
        matrix.order = len(rows)
        matrix.mode = mode
        matrix._rows = rows
        return matrix

    @classmethod
    def zeros(cls, order: int, mode: str = EXACT) -> "Matrix":
        zero = zero_scalar(mode)
        return cls._wrap([[zero] * order for _ in range(order)], mode)

    @classmethod
    def identity(cls, order: int, mode: str = EXACT) -> "Matrix":
        zero, one = zero_scalar(mode), one_scalar(mode)
        rows = [[one if i == j else zero for j in range(order)] for i in range(order)]
        return cls._wrap(rows, mode)

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return tuple(self._rows[i])

    def to_lists(self) -> list[list[Scalar]]:
        return [list(row) for row in self._rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.mode == other.mode and self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matrix({self._rows!r}, mode={self.mode!r})"

    def _check_compatible(self, other: "Matrix") -> None:
        if self.mode != other.mode:
            raise ValueError(f"scalar modes differ: {self.mode} vs {other.mode}")
        if self.order != other.order:
            raise ValueError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        rows = [
            [a + b for a, b in zip(ra, rb)]
            for ra, rb in zip(self._rows, other._rows)
        ]
        return Matrix._wrap(rows, self.mode)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        rows = [
            [a - b for a, b in zip(ra, rb)]
            for ra, rb in zip(self._rows, other._rows)
        ]
        return Matrix._wrap(rows, self.mode)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        cols = list(zip(*other._rows))
        rows = [
            [sum(a * b for a, b in zip(row, col)) for col in cols]
            for row in self._rows
        ]
        return Matrix._wrap(rows, self.mode)

    def __pow__(self, exponent: int) -> "Matrix":
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.order, self.mode)
        for _ in range(exponent):
            result = result @ self
        return result

    def scaled(self, factor) -> "Matrix":
        factor = _coerce(factor, self.mode)
        rows = [[factor * v for v in row] for row in self._rows]
        return Matrix._wrap(rows, self.mode)

    def transpose(self) -> "Matrix":
        return Matrix._wrap([list(col) for col in zip(*self._rows)], self.mode)

    def submatrix(self, keep: Sequence[int]) -> "Matrix":
        """Principal submatrix on the given (ordered) index subset."""
        rows = [[self._rows[i][j] for j in keep] for i in keep]
        return Matrix._wrap(rows, self.mode)

    def with_mode(self, mode: str) -> "Matrix":
        if mode == self.mode:
            return self
        return Matrix(self._rows, mode)

    def max_abs(self) -> Scalar:
        if self.order == 0:
            return zero_scalar(self.mode)
        return max(abs(v) for row in self._rows for v in row)

    def row_sums(self) -> list[Scalar]:
        zero = zero_scalar(self.mode)
        return [sum(row, zero) for row in self._rows]

    def is_symmetric(self, tolerance=0) -> bool:
        for i in range(self.order):
            for j in range(i + 1, self.order):
                if abs(self._rows[i][j] - self._rows[j][i]) > tolerance:
                    return False
        return True


def determinant(matrix: Matrix) -> Scalar:
    """Determinant; exact fraction-free elimination or float partial pivoting.

    Returns zero for singular input instead of raising.
    """
    if matrix.mode == EXACT:
        return _determinant_exact(matrix)
    return _determinant_float(matrix)


def _determinant_exact(matrix: Matrix) -> Fraction:
    # Bareiss fraction-free elimination: every intermediate entry is a minor
    # of the original matrix, which keeps numerators and denominators small.
    n = matrix.order
    if n == 0:
        return Fraction(1)
    m = matrix.to_lists()
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / previous
            m[i][k] = Fraction(0)
        previous = pivot
    return sign * m[n - 1][n - 1]


def _determinant_float(matrix: Matrix) -> float:
    n = matrix.order
    if n == 0:
        return 1.0
    m = matrix.to_lists()
    det = 1.0
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda r: abs(m[r][k]))
        if m[pivot_row][k] == 0.0:
            return 0.0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if factor:
                row_i, row_k = m[i], m[k]
                for j in range(k, n):
                    row_i[j] -= factor * row_k[j]
    return det


def invert(matrix: Matrix) -> Matrix:
    """Inverse via Gauss-Jordan elimination.

    Raises :class:`SingularMatrixError` when no acceptable pivot exists
    (exactly zero in exact mode, below ``FLOAT_PIVOT_RTOL`` times the row
    scale in float mode).
    """
    n = matrix.order
    mode = matrix.mode
    a = matrix.to_lists()
    inv = Matrix.identity(n, mode).to_lists()
    if mode == FLOAT:
        scales = [max((abs(v) for v in row), default=0.0) or 1.0 for row in a]
    for col in range(n):
        pivot_row = _select_pivot(a, col, n, mode, scales if mode == FLOAT else None)
        if pivot_row is None:
            raise SingularMatrixError(f"matrix of order {n} is singular at column {col}")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
            if mode == FLOAT:
                scales[col], scales[pivot_row] = scales[pivot_row], scales[col]
        pivot = a[col][col]
        a[col] = [v / pivot for v in a[col]]
        inv[col] = [v / pivot for v in inv[col]]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col]
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return Matrix._wrap(inv, mode)


def _select_pivot(a, col, n, mode, scales):
    if mode == EXACT:
        for r in range(col, n):
            if a[r][col] != 0:
                return r
        return None
    best, best_size = None, 0.0
    for r in range(col, n):
        size = abs(a[r][col]) / scales[r]
        if size > best_size:
            best, best_size = r, size
    if best is None or best_size < FLOAT_PIVOT_RTOL:
        return None
    return best


class SeriesSum(NamedTuple):
    total: Matrix
    terms_used: int
    last_term_norm: Scalar


def geometric_series(matrix: Matrix, tolerance: float, max_terms: int = 100_000) -> SeriesSum:
    """Sum powers of ``matrix`` until the current power drops below tolerance.

    Terms are accumulated one by one (the stopping rule inspects each term's
    max-abs norm); the first term below ``tolerance`` is not added. Returns
    the partial sum, the number of terms added, and the norm of the last
    term that was added. Raises :class:`NotConvergedError` when ``max_terms``
    terms were added and the next term is still at or above tolerance.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    total = Matrix.zeros(matrix.order, matrix.mode)
    term = Matrix.identity(matrix.order, matrix.mode)
    last_norm = zero_scalar(matrix.mode)
    used = 0
    while used < max_terms:
        norm = term.max_abs()
        if norm < tolerance:
            return SeriesSum(total, used, last_norm)
        total = total + term
        last_norm = norm
        used += 1
        term = term @ matrix
    if term.max_abs() < tolerance:
        return SeriesSum(total, used, last_norm)
    raise NotConvergedError(
        f"series did not reach tolerance {tolerance} within {max_terms} terms "
        f"(last term norm {float(term.max_abs()):.3e})"
    )
