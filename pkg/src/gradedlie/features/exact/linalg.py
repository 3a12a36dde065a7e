"""Exact row reduction over Q(sqrt 2) on flattened matrices.

Matrices are treated as vectors indexed by their positions in row-major
order. Pivots are always the leftmost nonzero position, so every result is
deterministic given the input order.
"""

from __future__ import annotations

import bisect
import logging
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple, Union

from ...errors import DimensionMismatchError, SpanEscapeError
from .matrix import Matrix, Position
from .scalar import ONE, ZERO, Scalar

logger = logging.getLogger(__name__)

Vector = Dict[Position, Scalar]
Constraint = Callable[[Matrix], Union[Matrix, Scalar, Sequence[Scalar]]]


class EchelonSpan:
    """Incrementally maintained row echelon form of a list of matrices.

    Each stored row remembers how it is written in terms of the matrices
    added so far, so coordinates relative to the accepted spanning list
    can be recovered exactly.
    """

    def __init__(self, n: int):
        self.n = n
        self._pivots: List[Position] = []
        self._rows: Dict[Position, Tuple[Vector, Dict[int, Scalar]]] = {}
        self._basis: List[Matrix] = []

    def __len__(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> List[Matrix]:
        """The accepted (linearly independent) matrices in insertion order."""
        return list(self._basis)

    def _reduce(self, matrix: Matrix) -> Tuple[Vector, Dict[int, Scalar]]:
        if matrix.n != self.n:
            raise DimensionMismatchError(f"Expected size {self.n}, got {matrix.n}")
        residual: Vector = dict(matrix.entries)
        used: Dict[int, Scalar] = {}
        for pivot in self._pivots:
            factor = residual.get(pivot)
            if not factor:
                continue
            row, combo = self._rows[pivot]
            for position, value in row.items():
                updated = residual.get(position, ZERO) - factor * value
                if updated:
                    residual[position] = updated
                else:
                    residual.pop(position, None)
            for index, value in combo.items():
                used[index] = used.get(index, ZERO) + factor * value
        return residual, used

    def contains(self, matrix: Matrix) -> bool:
        residual, _ = self._reduce(matrix)
        return not residual

    def add(self, matrix: Matrix) -> bool:
        """Add ``matrix`` if it is independent; return whether it was added."""
        residual, used = self._reduce(matrix)
        if not residual:
            return False
        pivot = min(residual)
        inverse = residual[pivot].inverse()
        index = len(self._basis)
        combo = {k: -v * inverse for k, v in used.items() if v}
        combo[index] = inverse
        row = {p: v * inverse for p, v in residual.items()}
        bisect.insort(self._pivots, pivot)
        self._rows[pivot] = (row, combo)
        self._basis.append(matrix)
        return True

    def coordinates(self, matrix: Matrix) -> List[Scalar]:
        """Exact coefficients c with matrix = sum c_k * basis[k]."""
        residual, used = self._reduce(matrix)
        if residual:
            raise SpanEscapeError(f"{matrix!r} is not in the span")
        return [used.get(k, ZERO) for k in range(len(self._basis))]


def span_basis(vectors: Sequence[Matrix]) -> List[Matrix]:
    """Maximal linearly independent subset, keeping input order."""
    if not vectors:
        return []
    span = EchelonSpan(vectors[0].n)
    for vector in vectors:
        span.add(vector)
    return span.basis


def rank(vectors: Sequence[Matrix]) -> int:
    return len(span_basis(vectors))


def same_span(first: Sequence[Matrix], second: Sequence[Matrix]) -> bool:
    """Whether two lists of matrices span the same subspace."""
    if not first or not second:
        return rank(first) == rank(second)
    span = EchelonSpan(first[0].n)
    for vector in first:
        span.add(vector)
    size = len(span)
    return all(span.contains(v) for v in second) and rank(second) == size


def normalize_leading(matrix: Matrix) -> Matrix:
    """Scale so that the first nonzero entry in row-major order is 1."""
    leading = matrix.leading()
    if leading is None:
        return matrix
    return matrix.scale(leading[1].inverse())


def _flatten(key: int, value: Union[Matrix, Scalar, Sequence[Scalar]]) -> Dict[Hashable, Scalar]:
    if isinstance(value, Matrix):
        return {(key, p): v for p, v in value.entries.items()}
    if isinstance(value, Scalar):
        return {(key, 0): value} if value else {}
    return {(key, k): Scalar.coerce(v) for k, v in enumerate(value) if v}


def rref(rows: List[Dict[int, Scalar]]) -> List[Tuple[int, Dict[int, Scalar]]]:
    """Reduced row echelon form of sparse rows over column indices.

    Returns (pivot column, normalized row) pairs sorted by pivot column.
    """
    reduced: List[Tuple[int, Dict[int, Scalar]]] = []
    pending = [dict(r) for r in rows if r]
    while pending:
        column = min(min(r) for r in pending)
        chosen = next(k for k, r in enumerate(pending) if column in r)
        pivot_row = pending.pop(chosen)
        inverse = pivot_row[column].inverse()
        pivot_row = {c: v * inverse for c, v in pivot_row.items()}

        def eliminate(row: Dict[int, Scalar]) -> Dict[int, Scalar]:
            factor = row.get(column)
            if not factor:
                return row
            for c, v in pivot_row.items():
                updated = row.get(c, ZERO) - factor * v
                if updated:
                    row[c] = updated
                else:
                    row.pop(c, None)
            return row

        pending = [r for r in (eliminate(r) for r in pending) if r]
        reduced = [(p, eliminate(r)) for p, r in reduced]
        reduced.append((column, pivot_row))
    reduced.sort(key=lambda item: item[0])
    return reduced


def nullspace(
    n: int,
    constraints: Sequence[Constraint],
    positions: Optional[Sequence[Position]] = None,
) -> List[Matrix]:
    """Basis of the matrices X (supported on ``positions``) with c(X) = 0 for all c.

    Every constraint must be linear. Basis elements are scaled to leading
    coefficient 1 and ordered by leading position.
    """
    unknowns = list(positions) if positions is not None else [
        (i, j) for i in range(n) for j in range(n)
    ]
    equations: Dict[Hashable, Dict[int, Scalar]] = {}
    for column, position in enumerate(unknowns):
        unit = Matrix.unit(n, *position)
        for key, constraint in enumerate(constraints):
            for row_key, value in _flatten(key, constraint(unit)).items():
                equations.setdefault(row_key, {})[column] = value

    reduced = rref(list(equations.values()))
    pivot_columns = {p for p, _ in reduced}
    solutions: List[Matrix] = []
    for free in range(len(unknowns)):
        if free in pivot_columns:
            continue
        entries: Dict[Position, Scalar] = {unknowns[free]: ONE}
        for pivot, row in reduced:
            value = row.get(free)
            if value:
                entries[unknowns[pivot]] = -value
        solutions.append(normalize_leading(Matrix(n, entries)))
    solutions.sort(key=lambda m: m.support()[0])
    logger.debug(f"nullspace: {len(unknowns)} unknowns, {len(solutions)} solutions")
    return solutions
