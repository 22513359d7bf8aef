"""Exact integer matrices, graph Laplacians and fraction-free determinants.

Matrix row/column indices in the public functions are 1-based, matching
the vertex labels of the graphs the Laplacians come from.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import ExactDivisionViolation
from .graph import Multigraph


class ExactCount(int):
    """Non-negative arbitrary-precision count."""

    def __new__(cls, value=0):
        value = int(value)
        if value < 0:
            raise ValueError(f"counts are non-negative, got {value}")
        return super().__new__(cls, value)

    def __repr__(self):
        return f"ExactCount({int(self)})"


class IntegerMatrix:
    """Immutable dense square matrix of Python ints."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        self._rows = rows

    @classmethod
    def identity(cls, d: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(d)] for i in range(d)])

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> int:
        return self._rows[i - 1][j - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if isinstance(other, IntegerMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntegerMatrix({self.to_lists()})"


def laplacian(g: Multigraph) -> IntegerMatrix:
    d = g.vertex_count
    rows = [[0] * d for _ in range(d)]
    for u, v, k in g.edges():
        rows[u - 1][v - 1] -= k
        rows[v - 1][u - 1] -= k
        rows[u - 1][u - 1] += k
        rows[v - 1][v - 1] += k
    return IntegerMatrix(rows)


def minor(mat: IntegerMatrix, row: int, col: int) -> IntegerMatrix:
    """Delete ``row`` and ``col`` (1-based)."""
    d = mat.dimension
    if not (1 <= row <= d and 1 <= col <= d):
        raise IndexError(f"({row}, {col}) outside a {d}x{d} matrix")
    return IntegerMatrix(
        [x for j, x in enumerate(r, 1) if j != col]
        for i, r in enumerate(mat.rows, 1)
        if i != row
    )


def bareiss(
    rows: list[list[int]],
    on_division: Callable[[int, int, int], None] | None = None,
) -> int:
    """Single-step Bareiss elimination, in place on ``rows``.

    ``on_division(numerator, divisor, quotient)`` is called for every
    exact division performed; a non-zero remainder raises
    ExactDivisionViolation.
    """
    d = len(rows)
    sign = 1
    prev = 1
    for k in range(d - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, d):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = rows[k]
        pivot = pivot_row[k]
        tail = pivot_row[k + 1:]
        for i in range(k + 1, d):
            row = rows[i]
            lead = row[k]
            updated = []
            for a, b in zip(row[k + 1:], tail):
                num = pivot * a - lead * b
                q, r = divmod(num, prev)
                if r:
                    raise ExactDivisionViolation(f"{num} / {prev} at step {k}")
                if on_division is not None:
                    on_division(num, prev, q)
                updated.append(q)
            row[k + 1:] = updated
            row[k] = 0
        prev = pivot
    return sign * rows[d - 1][d - 1] if d else 1


def determinant(mat: IntegerMatrix, on_division=None) -> int:
    """Exact determinant; the 0x0 determinant is 1."""
    return bareiss(mat.to_lists(), on_division)


def principal_cofactor(mat: IntegerMatrix, k: int) -> int:
    return determinant(minor(mat, k, k))


def integer_power(base: int, exp: int) -> int:
    if exp < 0:
        raise ValueError(f"negative exponent {exp}")
    return pow(int(base), int(exp))
