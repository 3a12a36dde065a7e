"""Tests for the graded bracket, traces and the bracket identities."""

import itertools

import pytest
from hypothesis import given, strategies as st

from ....errors import HomogeneityError, PartitionMismatchError
from ...exact import Matrix, SQRT2
from ...grading import D01, D10, D11, Degree, DegreePartition, SignConvention, all_degrees
from ..bracket import (
    graded_bracket,
    graded_supertrace,
    graded_symmetry_check,
    grading_check,
    jacobi_check,
    trace,
)
from ..elements import GradedMatrix, homogeneous_components

LA = SignConvention.LIE_ALGEBRA
LSA = SignConvention.LIE_SUPERALGEBRA

degrees = st.sampled_from(all_degrees())


def unit(partition, i, j):
    return GradedMatrix.unit(partition, i, j)


def all_units(partition):
    n = len(partition)
    return [unit(partition, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def test_so_q_short_root_bracket():
    """Test [[f1-, f1+]] = 2(e11 - e33) in so_1(5)."""
    p = DegreePartition.so_q(2, 1)
    f_minus = (unit(p, 1, 5) - unit(p, 5, 3)).scale(SQRT2)
    f_plus = (unit(p, 5, 1) - unit(p, 3, 5)).scale(SQRT2)
    assert f_minus.degree == D01 and f_plus.degree == D01

    result = graded_bracket(f_minus, f_plus, LA)

    assert result.mat == (unit(p, 1, 1) - unit(p, 3, 3)).mat.scale(2)
    assert result.degree == Degree(0, 0)


def test_superalgebra_commutator_on_degree_11():
    """Test [[e12, e21]] = e11 - e22 in gl(0,0|1,1)."""
    p = DegreePartition.gl_super(0, 0, 1, 1)
    e12, e21 = unit(p, 1, 2), unit(p, 2, 1)
    assert e12.degree == D11
    assert graded_bracket(e12, e21, LSA).mat == (unit(p, 1, 1) - unit(p, 2, 2)).mat


def test_superalgebra_anticommutator_on_odd_degree():
    """Test {e12, e21} = e11 + e22 in gl(1,0|1,0)."""
    p = DegreePartition.gl_super(1, 0, 1, 0)
    result = graded_bracket(unit(p, 1, 2), unit(p, 2, 1), LSA)
    assert result.mat == Matrix.identity(2)


@given(
    st.lists(degrees, min_size=1, max_size=5),
    st.integers(0, 4),
    st.integers(0, 4),
)
def test_lie_algebra_self_bracket_vanishes(labels, i, j):
    """Test [[x, x]] = 0 for every homogeneous x under the LA pairing."""
    p = DegreePartition.from_degrees(labels)
    n = len(p)
    x = unit(p, i % n + 1, j % n + 1).scale(3)
    assert graded_bracket(x, x, LA).is_zero


def test_rejects_inhomogeneous_input():
    """Test that mixed matrices must be split first."""
    p = DegreePartition.gl_pqrs(1, 1, 0, 0)
    mixed = unit(p, 1, 1) + unit(p, 1, 2)
    assert mixed.degree is None
    with pytest.raises(HomogeneityError):
        graded_bracket(mixed, unit(p, 1, 1), LA)
    parts = homogeneous_components(mixed)
    assert list(parts) == [Degree(0, 0), D01]
    assert graded_bracket(parts[D01], unit(p, 1, 1), LA).degree == D01


def test_rejects_partition_mismatch():
    """Test that elements over different partitions do not bracket."""
    first = unit(DegreePartition.gl_pqrs(1, 1, 0, 0), 1, 2)
    second = unit(DegreePartition.gl_pqrs(1, 0, 1, 0), 1, 2)
    with pytest.raises(PartitionMismatchError):
        graded_bracket(first, second, LA)


def test_declared_degree_is_enforced():
    """Test that a wrong declared degree is refused."""
    p = DegreePartition.gl_pqrs(1, 1, 0, 0)
    with pytest.raises(HomogeneityError):
        GradedMatrix(Matrix.unit(2, 0, 1), p, D10)


def test_supertrace_examples():
    """Test Str on gl(1,0|1,0)."""
    p = DegreePartition.gl_super(1, 0, 1, 0)
    assert graded_supertrace(unit(p, 1, 1)) == 1
    assert graded_supertrace(unit(p, 2, 2)) == -1
    assert graded_supertrace(graded_bracket(unit(p, 1, 2), unit(p, 2, 1), LSA)) == 0


@pytest.mark.parametrize(
    "partition, conv",
    [
        (DegreePartition.gl_pqrs(1, 1, 1, 1), LA),
        (DegreePartition.gl_pqrs(2, 0, 1, 1), LA),
        (DegreePartition.gl_super(1, 1, 1, 1), LSA),
        (DegreePartition.gl_super(1, 0, 2, 1), LSA),
    ],
)
def test_bracket_laws_on_matrix_units(partition, conv):
    """Test symmetry, grading and the vanishing (super)trace over all unit pairs."""
    units = all_units(partition)
    for x, y in itertools.product(units, repeat=2):
        assert graded_symmetry_check(x, y, conv)
        assert grading_check(x, y, conv)
        bracket = graded_bracket(x, y, conv)
        if conv is LA:
            assert trace(bracket) == 0
        else:
            assert graded_supertrace(bracket) == 0


def test_jacobi_on_matrix_units():
    """Test the graded Jacobi identity on all unit triples of a small algebra."""
    for partition, conv in [
        (DegreePartition.gl_pqrs(1, 1, 1, 0), LA),
        (DegreePartition.gl_super(1, 0, 1, 1), LSA),
    ]:
        units = all_units(partition)
        for x, y, z in itertools.product(units, repeat=3):
            assert jacobi_check(x, y, z, conv)


def test_pathological_so_pqrs_elements():
    """Test the three commuting diagonal-like elements of so_{1,1,2,2}(6)."""
    p = DegreePartition.gl_pqrs(1, 1, 2, 2)
    h1 = unit(p, 1, 4) - unit(p, 4, 1)
    h2 = unit(p, 2, 5) + unit(p, 5, 2)
    h3 = unit(p, 3, 6) + unit(p, 6, 3)
    assert (h1.degree, h2.degree, h3.degree) == (D10, D10, D01)

    # [h1,h2] is a commutator, {h1,h3} and {h2,h3} are anticommutators
    assert LA.sign(h1.degree, h2.degree) == 1
    assert LA.sign(h1.degree, h3.degree) == -1
    assert LA.sign(h2.degree, h3.degree) == -1
    for x, y in [(h1, h2), (h1, h3), (h2, h3)]:
        assert graded_bracket(x, y, LA).is_zero
    assert jacobi_check(h1, h2, h3, LA)


def test_jacobi_with_zero_argument():
    """Test that a zero element satisfies every identity."""
    p = DegreePartition.gl_pqrs(1, 1, 1, 0)
    zero = GradedMatrix.zero(p)
    x, y = unit(p, 1, 2), unit(p, 2, 3)
    assert jacobi_check(x, y, zero, LA)
    assert graded_bracket(x, zero, LA).is_zero
