"""Tests for the K and J form conditions."""

import itertools

import pytest

from ....errors import DimensionMismatchError
from ...exact import Matrix, SQRT2, nullspace
from ...grading import DegreePartition, SignConvention, all_degrees
from ..bracket import graded_bracket
from ..elements import GradedMatrix
from ..forms import FormCondition, form_membership, form_residual
from ..transpose import TransposeKind, graded_transpose


def unit(partition, i, j):
    return GradedMatrix.unit(partition, i, j)


def homogeneous_solutions(partition, cond):
    """Form-condition solutions solved one degree at a time."""
    n = len(partition)
    solutions = []
    for degree in all_degrees():
        positions = [
            (i, j) for i in range(n) for j in range(n) if partition.degree_at(i, j) == degree
        ]
        for mat in nullspace(n, [cond.constraint(partition)], positions=positions):
            solutions.append(GradedMatrix(mat, partition, degree))
    return solutions


def test_so_q_form_is_symmetric_involution():
    """Test K^T = K and K K = 1."""
    cond = FormCondition.so_q(3, 1)
    p = DegreePartition.so_q(3, 1)
    k = cond.form
    assert k.transpose() == k
    assert k @ k == Matrix.identity(7)
    assert graded_transpose(GradedMatrix(k, p), TransposeKind.GRADED_TRANSPOSE).mat == k


def test_so_q_membership_examples():
    """Test f1-, zero and e11 against the K condition of so_1(5)."""
    p = DegreePartition.so_q(2, 1)
    cond = FormCondition.so_q(2, 1)
    f_minus = (unit(p, 1, 5) - unit(p, 5, 3)).scale(SQRT2)
    assert form_membership(f_minus, cond)
    assert form_membership(GradedMatrix.zero(p), cond)
    assert not form_membership(unit(p, 1, 1), cond)
    assert form_residual(unit(p, 1, 1), cond) == (unit(p, 1, 3) + unit(p, 3, 1)).mat


def test_osp_membership_example():
    """Test b1- against the J condition of osp(1,0|2,2)."""
    p = DegreePartition.osp(0, 0, 1, 1)
    cond = FormCondition.osp(0, 0, 1, 1)
    b_minus = (unit(p, 1, 2) - unit(p, 4, 1)).scale(SQRT2)
    assert form_membership(b_minus, cond)
    assert not form_membership(unit(p, 1, 2), cond)


def test_dimension_mismatch():
    """Test that the form and matrix sizes must agree."""
    with pytest.raises(DimensionMismatchError):
        form_membership(unit(DegreePartition.so_q(3, 1), 1, 1), FormCondition.so_q(2, 1))


def test_so_q_range():
    """Test the 1 <= q <= n-1 guard."""
    with pytest.raises(ValueError):
        FormCondition.so_q(2, 2)


@pytest.mark.parametrize(
    "partition, cond, conv, dimension",
    [
        (DegreePartition.so_q(2, 1), FormCondition.so_q(2, 1), SignConvention.LIE_ALGEBRA, 10),
        (DegreePartition.osp(0, 0, 1, 1), FormCondition.osp(0, 0, 1, 1), SignConvention.LIE_SUPERALGEBRA, 14),
    ],
)
def test_form_solutions_are_closed(partition, cond, conv, dimension):
    """Test that brackets of solutions are again solutions."""
    solutions = homogeneous_solutions(partition, cond)
    assert len(solutions) == dimension
    for x, y in itertools.product(solutions, repeat=2):
        assert form_membership(graded_bracket(x, y, conv), cond)
