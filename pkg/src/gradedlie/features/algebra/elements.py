"""Matrices tied to a degree partition."""

from dataclasses import dataclass
from typing import Dict, Optional

from ...errors import DimensionMismatchError, HomogeneityError, PartitionMismatchError
from ..exact import Matrix, matrix_unit
from ..exact.matrix import Coefficient
from ..grading import Degree, DegreePartition, all_degrees


@dataclass(frozen=True)
class GradedMatrix:
    """A matrix acting on a graded space with the given index degrees.

    ``degree`` is inferred when every nonzero entry shares one degree. It
    stays None for the zero matrix (homogeneous of every degree) unless set,
    and for mixed matrices, which are not homogeneous.
    """

    mat: Matrix
    partition: DegreePartition
    degree: Optional[Degree] = None

    def __post_init__(self) -> None:
        if len(self.partition) != self.mat.n:
            raise DimensionMismatchError(
                f"Partition of length {len(self.partition)} for a {self.mat.n}x{self.mat.n} matrix"
            )
        found = {self.partition.degree_at(i, j) for i, j in self.mat.entries}
        if self.degree is not None:
            stray = found - {self.degree}
            if stray:
                raise HomogeneityError(
                    f"Entries of degree {sorted(str(d) for d in stray)} in an element of degree {self.degree}"
                )
        elif len(found) == 1:
            object.__setattr__(self, "degree", found.pop())

    @classmethod
    def unit(cls, partition: DegreePartition, i: int, j: int) -> "GradedMatrix":
        """e_ij with 1-based indices."""
        return cls(matrix_unit(len(partition), i, j), partition)

    @classmethod
    def zero(cls, partition: DegreePartition, degree: Optional[Degree] = None) -> "GradedMatrix":
        return cls(Matrix.zero(len(partition)), partition, degree)

    @property
    def n(self) -> int:
        return self.mat.n

    @property
    def is_zero(self) -> bool:
        return self.mat.is_zero

    @property
    def is_homogeneous(self) -> bool:
        return self.degree is not None or self.mat.is_zero

    def _same_partition(self, other: "GradedMatrix") -> None:
        if self.partition != other.partition:
            raise PartitionMismatchError(
                f"Partitions {self.partition} and {other.partition} differ"
            )

    def _combine(self, other: "GradedMatrix", mat: Matrix) -> "GradedMatrix":
        degree = self.degree if self.degree == other.degree else None
        if degree is not None:
            return GradedMatrix(mat, self.partition, degree)
        return GradedMatrix(mat, self.partition)

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._same_partition(other)
        return self._combine(other, self.mat + other.mat)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._same_partition(other)
        return self._combine(other, self.mat - other.mat)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(-self.mat, self.partition, self.degree)

    def scale(self, factor: Coefficient) -> "GradedMatrix":
        return GradedMatrix(self.mat.scale(factor), self.partition, self.degree)

    def __rmul__(self, factor: Coefficient) -> "GradedMatrix":
        return self.scale(factor)

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        """Plain matrix product; degrees add for homogeneous factors."""
        self._same_partition(other)
        product = self.mat @ other.mat
        if self.degree is not None and other.degree is not None:
            return GradedMatrix(product, self.partition, self.degree + other.degree)
        return GradedMatrix(product, self.partition)

    def __repr__(self) -> str:
        return f"GradedMatrix({self.mat!r}, degree={self.degree})"


def homogeneous_components(x: GradedMatrix) -> Dict[Degree, GradedMatrix]:
    """Split ``x`` into its nonzero homogeneous parts, in canonical degree order."""
    parts: Dict[Degree, Dict] = {}
    for (i, j), value in x.mat.entries.items():
        parts.setdefault(x.partition.degree_at(i, j), {})[(i, j)] = value
    return {
        degree: GradedMatrix(Matrix(x.n, parts[degree]), x.partition, degree)
        for degree in all_degrees()
        if degree in parts
    }
