"""Tests for the algebra verifier."""

import pytest

from ....models.algebra import AlgebraFamily, AlgebraSpec
from ...algebra import GradedMatrix
from ...catalog import AlgebraBasis
from ...grading import DegreePartition, SignConvention
from ..verifier import AlgebraVerifier, merge_reports, verify_spec, verify_sweep


def suite_names(report):
    return [suite.name for suite in report.suites]


def test_so_q_passes_every_suite(so_q_2_1):
    """Test a valid so_q algebra."""
    report = AlgebraVerifier(so_q_2_1).verify()

    assert report.is_valid is True
    assert suite_names(report) == [
        "jacobi",
        "symmetry",
        "grading",
        "closure",
        "trace",
        "form",
        "dims",
        "roots",
        "relations",
    ]
    assert report.suites[0].checked == 1000
    assert report.warnings == []


def test_printed_dimension_formula_is_flagged(so_q_3_1):
    """Test the warning for the printed (0,0) dimension formula."""
    report = AlgebraVerifier(so_q_3_1).verify()

    assert report.is_valid is True
    assert [w.code for w in report.warnings] == ["PRINTED_DIM_FORMULA_MISMATCH"]
    assert "-1" in report.warnings[0].message


def test_osp_passes_every_suite(osp_1_1):
    """Test osp(1,0|2,2) including roots and paraboson relations."""
    report = AlgebraVerifier(osp_1_1).verify()
    assert report.is_valid is True
    assert "relations" in suite_names(report)


def test_gl_runs_bracket_suites_only():
    """Test that families without a form skip the form, root and relation suites."""
    report = verify_spec(AlgebraSpec(family=AlgebraFamily.GL_PQRS, params=[1, 1, 0, 0]))
    assert report.is_valid is True
    assert suite_names(report) == ["jacobi", "symmetry", "grading", "closure", "trace"]


def test_unclosed_subspace_fails():
    """Test that a subspace that is not bracket-closed is reported."""
    p = DegreePartition.gl_pqrs(2, 0, 0, 0)
    basis = AlgebraBasis(
        None,
        p,
        SignConvention.LIE_ALGEBRA,
        [GradedMatrix.unit(p, 1, 2), GradedMatrix.unit(p, 2, 1)],
    )
    report = AlgebraVerifier(basis).verify()

    assert report.is_valid is False
    closure = next(s for s in report.suites if s.name == "closure")
    assert {f.code for f in closure.failures} == {"CLOSURE_FAILED"}


def test_wrong_convention_fails(so_q_2_1):
    """Test so_q(2n+1) with the superalgebra bracket."""
    basis = AlgebraBasis(
        so_q_2_1.spec, so_q_2_1.partition, SignConvention.LIE_SUPERALGEBRA, so_q_2_1.basis
    )
    report = AlgebraVerifier(basis).verify()
    assert report.is_valid is False
    assert not next(s for s in report.suites if s.name == "closure").passed


def test_sweep_merges_in_order():
    """Test a small sweep."""
    specs = [
        AlgebraSpec.so_q(2, 1),
        AlgebraSpec(family=AlgebraFamily.SL_SUPER, params=[1, 0, 1, 0]),
    ]
    report = verify_sweep(specs)

    assert report.is_valid is True
    assert [s.target for s in report.suites][0] == "so_q(2,1)"
    assert report.suites[-1].target == specs[1].label


@pytest.mark.parametrize("valid", [True, False])
def test_merge_reports(valid, so_q_2_1):
    """Test that one failing report invalidates the merge."""
    good = AlgebraVerifier(so_q_2_1).verify()
    bad = good.model_copy(update={"is_valid": valid})
    merged = merge_reports([good, bad])
    assert merged.is_valid is valid
    assert len(merged.suites) == 2 * len(good.suites)
