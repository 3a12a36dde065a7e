"""Tests for the algebra constructors."""

import itertools

import pytest
from pydantic import ValidationError

from ....errors import SpanEscapeError, UnsupportedFamilyError
from ....models.algebra import AlgebraFamily, AlgebraSpec
from ...algebra import GradedMatrix, form_membership, graded_bracket, jacobi_check
from ...exact import SQRT2, same_span
from ...grading import D01, D10, D11, ZERO, SignConvention
from ..builders import (
    build,
    canonical_partition,
    cartan_basis,
    dims_formula_so_q,
    form_condition,
    graded_nullspace,
    matches_classical_after_flip,
    printed_dim_00_so_q,
    trace_constraint,
)


def spec(family, *params):
    return AlgebraSpec(family=family, params=list(params))


def test_so_q_dimensions():
    """Test the graded components of so_1(7)."""
    basis = build(AlgebraSpec.so_q(3, 1))
    assert basis.dims_by_degree == {ZERO: 7, D01: 2, D10: 4, D11: 8}
    assert basis.dimension == 21


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dims_formula_matches_construction(n):
    """Test the closed-form dimensions against the explicit basis."""
    for q in range(1, n):
        basis = build(AlgebraSpec.so_q(n, q), verify=n <= 3)
        assert basis.dims_by_degree == dims_formula_so_q(n, q)
        assert basis.dimension == n * (2 * n + 1)


def test_dims_formula_examples():
    """Test the formula values and the printed (0,0) expression."""
    assert dims_formula_so_q(2, 1) == {ZERO: 2, D01: 2, D10: 2, D11: 4}
    assert dims_formula_so_q(3, 1) == {ZERO: 7, D01: 2, D10: 4, D11: 8}
    assert printed_dim_00_so_q(3, 1) == -1
    with pytest.raises(ValueError):
        dims_formula_so_q(3, 3)


def test_so_q_matches_form_nullspace(so_q_2_1):
    """Test that the explicit block form spans the K-nullspace."""
    partition = canonical_partition(so_q_2_1.spec)
    cond = form_condition(so_q_2_1.spec)
    solved = graded_nullspace(partition, [cond.constraint(partition)])
    assert same_span([x.mat for x in solved], [x.mat for x in so_q_2_1.basis])


@pytest.mark.parametrize("n1, n2", [(1, 1), (2, 1), (1, 2)])
def test_osp_matches_form_nullspace(n1, n2):
    """Test that the explicit osp(1,0|2n1,2n2) blocks span the J-nullspace."""
    s = AlgebraSpec.osp(n1, n2)
    basis = build(s)
    partition = canonical_partition(s)
    solved = graded_nullspace(
        partition,
        [form_condition(s).constraint(partition), trace_constraint(partition, s.convention)],
    )
    assert same_span([x.mat for x in solved], [x.mat for x in basis.basis])
    n = n1 + n2
    assert basis.dimension == 2 * n * n + 3 * n


def test_osp_dimension(osp_1_1):
    """Test dim osp(1,0|2,2) = 14."""
    assert osp_1_1.dimension == 14
    assert osp_1_1.dims_by_degree[ZERO] == 6


def test_so_pqrs_dimension():
    """Test so_{1,1,2,2}(6) has the size of the antisymmetric 6x6 matrices."""
    basis = build(spec(AlgebraFamily.SO_PQRS, 1, 1, 2, 2))
    assert basis.dimension == 15


@pytest.mark.parametrize(
    "family, params, dimension",
    [
        (AlgebraFamily.GL_PQRS, (1, 1, 1, 1), 16),
        (AlgebraFamily.SL_PQRS, (1, 1, 1, 1), 15),
        (AlgebraFamily.SL_PQRS, (2, 0, 1, 0), 8),
        (AlgebraFamily.GL_SUPER, (1, 0, 1, 1), 9),
        (AlgebraFamily.SL_SUPER, (1, 1, 1, 1), 15),
        (AlgebraFamily.SL_PQRS, (1, 0, 0, 0), 0),
    ],
)
def test_gl_sl_dimensions(family, params, dimension):
    """Test n^2 and n^2 - 1."""
    assert build(spec(family, *params)).dimension == dimension


def test_basis_order_is_degree_then_position(so_q_2_1):
    """Test the deterministic ordering of the basis."""
    keys = [(x.degree, x.mat.leading()[0]) for x in so_q_2_1.basis]
    assert keys == sorted(keys)


def test_every_basis_element_satisfies_the_form(so_q_3_1, osp_1_1):
    """Test form membership of the explicit bases."""
    for basis in (so_q_3_1, osp_1_1):
        cond = form_condition(basis.spec)
        assert all(form_membership(x, cond) for x in basis.basis)


def test_jacobi_on_all_basis_triples(so_q_2_1):
    """Test the graded Jacobi identity on every triple of so_1(5)."""
    conv = so_q_2_1.convention
    for x, y, z in itertools.product(so_q_2_1.basis, repeat=3):
        assert jacobi_check(x, y, z, conv)


def test_closure_and_coordinates(so_q_2_1):
    """Test bracket closure and exact coordinates."""
    assert so_q_2_1.check_closure()
    p = so_q_2_1.partition
    f_minus = (GradedMatrix.unit(p, 1, 5) - GradedMatrix.unit(p, 5, 3)).scale(SQRT2)
    assert so_q_2_1.contains(f_minus)
    coordinates = so_q_2_1.coordinates(f_minus)
    rebuilt = sum(
        (x.mat.scale(c) for x, c in zip(so_q_2_1.basis, coordinates)), f_minus.mat.scale(0)
    )
    assert rebuilt == f_minus.mat
    with pytest.raises(SpanEscapeError):
        so_q_2_1.coordinates(GradedMatrix.unit(p, 1, 1))


def test_components(osp_1_1):
    """Test per-degree components of osp(1,0|2,2)."""
    assert len(osp_1_1.component(D10)) == 2
    assert len(osp_1_1.component(D01)) == 2
    assert len(osp_1_1.component(D11)) == 4


def test_cartan_examples(so_q_2_1, osp_1_1):
    """Test the diagonal Cartan elements."""
    p = so_q_2_1.partition
    expected = [
        GradedMatrix.unit(p, 1, 1) - GradedMatrix.unit(p, 3, 3),
        GradedMatrix.unit(p, 2, 2) - GradedMatrix.unit(p, 4, 4),
    ]
    assert [h.mat for h in cartan_basis(so_q_2_1)] == [h.mat for h in expected]

    o = osp_1_1.partition
    expected = [
        GradedMatrix.unit(o, 2, 2) - GradedMatrix.unit(o, 4, 4),
        GradedMatrix.unit(o, 3, 3) - GradedMatrix.unit(o, 5, 5),
    ]
    cartan = cartan_basis(osp_1_1)
    assert [h.mat for h in cartan] == [h.mat for h in expected]
    for h, k in itertools.product(cartan, repeat=2):
        assert graded_bracket(h, k, osp_1_1.convention).is_zero
    assert all(osp_1_1.contains(h) for h in cartan)


def test_cartan_refuses_so_pqrs():
    """Test that so_{p,q,r,s}(n) has no diagonal Cartan."""
    with pytest.raises(UnsupportedFamilyError):
        cartan_basis(build(spec(AlgebraFamily.SO_PQRS, 1, 1, 2, 2)))


def test_sl_super_cartan_is_supertraceless():
    """Test the diagonal elements of sl(1,1|1,1)."""
    basis = build(spec(AlgebraFamily.SL_SUPER, 1, 1, 1, 1))
    for h in cartan_basis(basis):
        assert basis.contains(h)
        assert h.degree == ZERO


@pytest.mark.parametrize("n, q", [(2, 1), (3, 1), (3, 2)])
def test_classical_comparison(n, q):
    """Test that exactly the four listed blocks differ from classical so(2n+1)."""
    assert matches_classical_after_flip(n, q)


def test_classical_differs_without_flip(so_q_2_1):
    """Test that so_q and classical so(2n+1) are different matrix sets."""
    from ..builders import classical_so_odd

    assert not same_span([x.mat for x in so_q_2_1.basis], classical_so_odd(2))


def test_general_osp_with_extrapolated_partition():
    """Test osp(3,0|2,2) built by nullspace and self-checked."""
    basis = build(AlgebraSpec.osp(1, 1, m1=1))
    assert basis.dimension == 25
    assert basis.convention is SignConvention.LIE_SUPERALGEBRA
    with pytest.raises(UnsupportedFamilyError):
        cartan_basis(basis)


def test_spec_validation():
    """Test parameter ranges on the wire model."""
    with pytest.raises(ValidationError):
        AlgebraSpec.so_q(3, 3)
    with pytest.raises(ValidationError):
        AlgebraSpec.osp(0, 1)
    with pytest.raises(ValidationError):
        AlgebraSpec(family="gl_pqrs", params=[1, 1])
    with pytest.raises(ValidationError):
        AlgebraSpec(family="so_q", params=[2, 1], convention="lie_superalgebra")


def test_matrix_size_limit(monkeypatch):
    """Test the desk-scale size guard."""
    monkeypatch.setenv("GRADEDLIE_MAX_MATRIX_SIZE", "4")
    from ....config import get_settings

    get_settings.cache_clear()
    with pytest.raises(ValueError):
        build(spec(AlgebraFamily.GL_PQRS, 5, 0, 0, 0))
