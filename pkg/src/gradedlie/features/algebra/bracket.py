"""The graded bracket and the identities it must satisfy."""

from typing import Tuple

from ...errors import HomogeneityError
from ..exact import Matrix, Scalar
from ..exact.scalar import ZERO
from ..grading import D01, D10, Degree, SignConvention
from .elements import GradedMatrix


def _degree(x: GradedMatrix, name: str) -> Degree:
    if x.degree is not None:
        return x.degree
    if x.is_zero:
        # zero is homogeneous of every degree; its brackets vanish
        return Degree(0, 0)
    raise HomogeneityError(f"{name} is not homogeneous; split it with homogeneous_components")


def _degrees(x: GradedMatrix, y: GradedMatrix) -> Tuple[Degree, Degree]:
    x._same_partition(y)
    return _degree(x, "First argument"), _degree(y, "Second argument")


def raw_bracket(x: GradedMatrix, y: GradedMatrix, conv: SignConvention) -> Matrix:
    """x.y - (-1)^{a.b} y.x as a bare matrix, without the homogeneity assertion."""
    a, b = _degrees(x, y)
    xy = x.mat @ y.mat
    yx = y.mat @ x.mat
    return xy - yx if conv.sign(a, b) == 1 else xy + yx


def graded_bracket(x: GradedMatrix, y: GradedMatrix, conv: SignConvention) -> GradedMatrix:
    """The graded bracket [[x, y]] of degree a + b.

    Raises HomogeneityError for non-homogeneous inputs or if the result has
    entries outside degree a + b, which means the partition is inconsistent.
    """
    a, b = _degrees(x, y)
    if x.is_zero or y.is_zero:
        known = x.degree is not None and y.degree is not None
        return GradedMatrix.zero(x.partition, a + b if known else None)
    return GradedMatrix(raw_bracket(x, y, conv), x.partition, a + b)


def jacobi_check(x: GradedMatrix, y: GradedMatrix, z: GradedMatrix, conv: SignConvention) -> bool:
    """Whether [[x,[[y,z]]]] = [[[[x,y]],z]] + (-1)^{a.b} [[y,[[x,z]]]] holds exactly."""
    a, b = _degrees(x, y)
    _degrees(y, z)
    left = graded_bracket(x, graded_bracket(y, z, conv), conv)
    first = graded_bracket(graded_bracket(x, y, conv), z, conv)
    second = graded_bracket(y, graded_bracket(x, z, conv), conv)
    right = first.mat + second.mat.scale(conv.sign(a, b))
    return left.mat == right


def graded_symmetry_check(x: GradedMatrix, y: GradedMatrix, conv: SignConvention) -> bool:
    """Whether [[x,y]] = -(-1)^{a.b} [[y,x]]."""
    a, b = _degrees(x, y)
    forward = graded_bracket(x, y, conv).mat
    backward = graded_bracket(y, x, conv).mat
    return forward == backward.scale(-conv.sign(a, b))


def grading_check(x: GradedMatrix, y: GradedMatrix, conv: SignConvention) -> bool:
    """Whether every entry of the bracket has degree a + b."""
    a, b = _degrees(x, y)
    target = a + b
    product = raw_bracket(x, y, conv)
    return all(x.partition.degree_at(i, j) == target for i, j in product.entries)


def trace(x: GradedMatrix) -> Scalar:
    return x.mat.trace()


def supertrace_weight(degree: Degree) -> int:
    """+1 on (0,0) and (1,1), -1 on (1,0) and (0,1)."""
    return -1 if degree in (D10, D01) else 1


def graded_supertrace(x: GradedMatrix) -> Scalar:
    """Sum of the diagonal entries weighted by the supertrace sign of each index."""
    total = ZERO
    for (i, j), value in x.mat.entries.items():
        if i == j:
            total = total + value * supertrace_weight(x.partition.index_degrees[i])
    return total
