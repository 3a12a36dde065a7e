"""Graded elements, the graded bracket, graded transposes and form conditions."""

from .bracket import (
    graded_bracket,
    graded_supertrace,
    graded_symmetry_check,
    grading_check,
    jacobi_check,
    raw_bracket,
    supertrace_weight,
    trace,
)
from .elements import GradedMatrix, homogeneous_components
from .forms import FormCondition, block_matrix, form_membership, form_residual
from .transpose import (
    TransposeKind,
    double_transpose_sign,
    double_transpose_table,
    graded_transpose,
    index_runs,
    transpose_matrix,
    transpose_sign_table,
)

__all__ = [
    "FormCondition",
    "GradedMatrix",
    "TransposeKind",
    "block_matrix",
    "double_transpose_sign",
    "double_transpose_table",
    "form_membership",
    "form_residual",
    "graded_bracket",
    "graded_supertrace",
    "graded_symmetry_check",
    "graded_transpose",
    "grading_check",
    "homogeneous_components",
    "index_runs",
    "jacobi_check",
    "raw_bracket",
    "supertrace_weight",
    "trace",
    "transpose_matrix",
    "transpose_sign_table",
]
