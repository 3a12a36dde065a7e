"""Immutable square matrices over Q(sqrt 2).

Only nonzero entries are stored. Positions are 0-based (row, col) tuples;
``matrix_unit`` takes the 1-based indices of matrix-unit notation e_ij.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ...errors import DimensionMismatchError
from .scalar import ZERO, Scalar

Position = Tuple[int, int]
Coefficient = Union[Scalar, int, Fraction]


class Matrix:
    """A square n x n matrix with exact entries."""

    __slots__ = ("_n", "_entries", "_hash")

    def __init__(self, n: int, entries: Optional[Mapping[Position, Coefficient]] = None):
        if n < 0:
            raise ValueError(f"Matrix size must be non-negative, got {n}")
        self._n = n
        self._hash: Optional[int] = None
        clean: Dict[Position, Scalar] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"Position ({i}, {j}) outside a {n}x{n} matrix")
            scalar = Scalar.coerce(value)
            if scalar:
                clean[(i, j)] = scalar
        self._entries = clean

    @classmethod
    def _trusted(cls, n: int, entries: Dict[Position, Scalar]) -> "Matrix":
        # entries already nonzero Scalars inside range
        matrix = cls.__new__(cls)
        matrix._n = n
        matrix._entries = entries
        matrix._hash = None
        return matrix

    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, {(i, i): 1 for i in range(n)})

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """The matrix unit with a single 1 at 0-based position (i, j)."""
        return cls(n, {(i, j): 1})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Coefficient]]) -> "Matrix":
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatchError("Rows do not form a square matrix")
        return cls(n, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)})

    @property
    def n(self) -> int:
        return self._n

    @property
    def entries(self) -> Mapping[Position, Scalar]:
        return self._entries

    def __getitem__(self, position: Position) -> Scalar:
        i, j = position
        if not (0 <= i < self._n and 0 <= j < self._n):
            raise IndexError(f"Position ({i}, {j}) outside a {self._n}x{self._n} matrix")
        return self._entries.get(position, ZERO)

    def support(self) -> List[Position]:
        """Nonzero positions in row-major order."""
        return sorted(self._entries)

    def items(self) -> Iterator[Tuple[Position, Scalar]]:
        for position in self.support():
            yield position, self._entries[position]

    def leading(self) -> Optional[Tuple[Position, Scalar]]:
        """First nonzero entry in row-major order, or None for zero."""
        if not self._entries:
            return None
        position = min(self._entries)
        return position, self._entries[position]

    def to_rows(self) -> List[List[Scalar]]:
        return [[self[(i, j)] for j in range(self._n)] for i in range(self._n)]

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._n == other._n and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        terms = " ".join(f"{v}*e{i + 1},{j + 1}" for (i, j), v in self.items())
        return f"Matrix({self._n}: {terms or '0'})"

    def _check(self, other: "Matrix") -> None:
        if self._n != other._n:
            raise DimensionMismatchError(f"Sizes {self._n} and {other._n} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        result = dict(self._entries)
        for position, value in other._entries.items():
            total = result.get(position, ZERO) + value
            if total:
                result[position] = total
            else:
                result.pop(position, None)
        return Matrix._trusted(self._n, result)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(self._n, {p: -v for p, v in self._entries.items()})

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "Matrix":
        scalar = Scalar.coerce(factor)
        if not scalar:
            return Matrix(self._n)
        return Matrix._trusted(self._n, {p: v * scalar for p, v in self._entries.items()})

    def __rmul__(self, factor: Coefficient) -> "Matrix":
        return self.scale(factor)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def transpose(self) -> "Matrix":
        """The ordinary transpose."""
        return Matrix._trusted(self._n, {(j, i): v for (i, j), v in self._entries.items()})

    def trace(self) -> Scalar:
        total = ZERO
        for (i, j), value in self._entries.items():
            if i == j:
                total = total + value
        return total


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product a.b."""
    if a.n != b.n:
        raise DimensionMismatchError(f"Cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    rows_of_b: Dict[int, List[Tuple[int, Scalar]]] = {}
    for (k, j), value in b.entries.items():
        rows_of_b.setdefault(k, []).append((j, value))
    result: Dict[Position, Scalar] = {}
    for (i, k), left in a.entries.items():
        for j, right in rows_of_b.get(k, ()):
            result[(i, j)] = result.get((i, j), ZERO) + left * right
    return Matrix._trusted(a.n, {p: v for p, v in result.items() if v})


def matrix_unit(n: int, i: int, j: int) -> Matrix:
    """e_ij of size n with 1-based indices."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"e_{i},{j} outside a {n}x{n} matrix")
    return Matrix.unit(n, i - 1, j - 1)


def linear_combination(terms: Iterable[Tuple[Coefficient, Matrix]], n: int) -> Matrix:
    """Sum of c * m over the given terms."""
    result: Dict[Position, Scalar] = {}
    for coefficient, matrix in terms:
        scalar = Scalar.coerce(coefficient)
        if not scalar:
            continue
        if matrix.n != n:
            raise DimensionMismatchError(f"Term of size {matrix.n} in a size {n} sum")
        for position, value in matrix.entries.items():
            result[position] = result.get(position, ZERO) + scalar * value
    return Matrix._trusted(n, {p: v for p, v in result.items() if v})
