"""Graded transpose and graded supertranspose.

Entry (i, j) of x moves to (j, i) with the sign (-1)^{(d_i + d_j).d_i},
where d_i is the degree of index i and the pairing is the one of the
matching convention. The rule is applied per entry, so inhomogeneous
matrices are transposed blockwise.
"""

from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..exact import Matrix
from ..grading import Degree, DegreePartition, SignConvention, all_degrees
from .elements import GradedMatrix


class TransposeKind(str, Enum):
    """Which pairing drives the transpose signs."""

    GRADED_TRANSPOSE = "graded_transpose"
    GRADED_SUPERTRANSPOSE = "graded_supertranspose"

    @property
    def convention(self) -> SignConvention:
        if self is TransposeKind.GRADED_TRANSPOSE:
            return SignConvention.LIE_ALGEBRA
        return SignConvention.LIE_SUPERALGEBRA

    @classmethod
    def for_convention(cls, conv: SignConvention) -> "TransposeKind":
        if conv is SignConvention.LIE_ALGEBRA:
            return cls.GRADED_TRANSPOSE
        return cls.GRADED_SUPERTRANSPOSE


def entry_sign(kind: TransposeKind, row: Degree, col: Degree) -> int:
    """Sign picked up by an entry whose row index has degree ``row``."""
    return kind.convention.sign(row + col, row)


def transpose_matrix(mat: Matrix, partition: DegreePartition, kind: TransposeKind) -> Matrix:
    degrees = partition.index_degrees
    entries = {}
    for (i, j), value in mat.entries.items():
        sign = entry_sign(kind, degrees[i], degrees[j])
        entries[(j, i)] = value if sign == 1 else -value
    return Matrix(mat.n, entries)


def graded_transpose(x: GradedMatrix, kind: TransposeKind) -> GradedMatrix:
    """x^T (GRADED_TRANSPOSE) or x^ST (GRADED_SUPERTRANSPOSE); degrees are preserved."""
    return GradedMatrix(transpose_matrix(x.mat, x.partition, kind), x.partition, x.degree)


def index_runs(partition: DegreePartition) -> List[int]:
    """Lengths of the maximal runs of equal index degrees."""
    runs: List[int] = []
    previous: Optional[Degree] = None
    for degree in partition.index_degrees:
        if degree == previous:
            runs[-1] += 1
        else:
            runs.append(1)
        previous = degree
    return runs


def transpose_sign_table(
    partition: DegreePartition,
    kind: TransposeKind,
    sizes: Optional[Sequence[int]] = None,
) -> List[List[int]]:
    """Block sign pattern of the transpose.

    Entry [I][J] is the sign the (I, J) block of x carries after it moves to
    block (J, I). Blocks default to the runs of equal index degree; explicit
    ``sizes`` must keep every block uniform in its index degrees.
    """
    blocks = list(sizes) if sizes is not None else index_runs(partition)
    if sum(blocks) != len(partition):
        raise ValueError(f"Block sizes {blocks} do not cover {len(partition)} indices")
    heads: List[Degree] = []
    offset = 0
    for size in blocks:
        run = set(partition.index_degrees[offset:offset + size])
        if len(run) != 1:
            raise ValueError(f"Block starting at index {offset + 1} mixes index degrees")
        heads.append(run.pop())
        offset += size
    return [[entry_sign(kind, row, col) for col in heads] for row in heads]


def double_transpose_sign(conv: SignConvention, a: Degree, b: Degree) -> int:
    """Sign of an entry with row degree a and column degree b after two transposes."""
    kind = TransposeKind.for_convention(conv)
    return entry_sign(kind, a, b) * entry_sign(kind, b, a)


def double_transpose_table(conv: SignConvention) -> Dict[Tuple[Degree, Degree], int]:
    """double_transpose_sign over all sixteen pairs of index degrees."""
    return {
        (a, b): double_transpose_sign(conv, a, b)
        for a in all_degrees()
        for b in all_degrees()
    }
