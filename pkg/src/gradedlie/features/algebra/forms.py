"""Bilinear-form conditions A^T K + K A = 0 and A^ST J + J A = 0."""

from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

from ...errors import DimensionMismatchError
from ..exact import Matrix
from ..exact.matrix import Position
from ..exact.scalar import Scalar
from ..grading import DegreePartition
from .elements import GradedMatrix
from .transpose import TransposeKind, transpose_matrix


def block_matrix(sizes: Sequence[int], blocks: Dict[Tuple[int, int], int]) -> Matrix:
    """Matrix from scalar multiples of identity blocks.

    ``blocks`` maps 0-based (block row, block column) to the multiple of the
    identity placed there; off-diagonal blocks must be square.
    """
    offsets = [sum(sizes[:k]) for k in range(len(sizes))]
    entries: Dict[Position, Scalar] = {}
    for (row, col), factor in blocks.items():
        if sizes[row] != sizes[col]:
            raise ValueError(f"Block ({row}, {col}) is not square")
        for k in range(sizes[row]):
            entries[(offsets[row] + k, offsets[col] + k)] = Scalar(factor)
    return Matrix(sum(sizes), entries)


@dataclass(frozen=True)
class FormCondition:
    """The invariance condition of a bilinear form under a graded transpose."""

    form: Matrix
    transpose_kind: TransposeKind

    @classmethod
    def so_q(cls, n: int, q: int) -> "FormCondition":
        """K for so_q(2n+1) with blocks of sizes (q, n-q, q, n-q, 1)."""
        if not 1 <= q <= n - 1:
            raise ValueError(f"so_q(2n+1) requires 1 <= q <= n-1, got n={n}, q={q}")
        sizes = [q, n - q, q, n - q, 1]
        form = block_matrix(sizes, {(0, 2): 1, (1, 3): -1, (2, 0): 1, (3, 1): -1, (4, 4): 1})
        return cls(form, TransposeKind.GRADED_TRANSPOSE)

    @classmethod
    def osp(cls, m1: int, m2: int, n1: int, n2: int) -> "FormCondition":
        """J for osp(2m1+1, 2m2 | 2n1, 2n2) with blocks (m, m, 1, N, N), m = m1+m2, N = n1+n2."""
        if min(m1, m2, n1, n2) < 0:
            raise ValueError("osp parameters must be non-negative")
        m, big_n = m1 + m2, n1 + n2
        sizes = [m, m, 1, big_n, big_n]
        form = block_matrix(sizes, {(0, 1): 1, (1, 0): 1, (2, 2): 1, (3, 4): 1, (4, 3): -1})
        return cls(form, TransposeKind.GRADED_SUPERTRANSPOSE)

    def residual_matrix(self, mat: Matrix, partition: DegreePartition) -> Matrix:
        """A^T F + F A for the form F of this condition."""
        if mat.n != self.form.n:
            raise DimensionMismatchError(
                f"Form of size {self.form.n} applied to a {mat.n}x{mat.n} matrix"
            )
        return transpose_matrix(mat, partition, self.transpose_kind) @ self.form + self.form @ mat

    def constraint(self, partition: DegreePartition) -> Callable[[Matrix], Matrix]:
        """Linear map whose kernel is the solution set, for nullspace solving."""
        return lambda mat: self.residual_matrix(mat, partition)


def form_residual(x: GradedMatrix, cond: FormCondition) -> Matrix:
    return cond.residual_matrix(x.mat, x.partition)


def form_membership(x: GradedMatrix, cond: FormCondition) -> bool:
    """Whether the transpose-form residual of x vanishes exactly."""
    return form_residual(x, cond).is_zero
