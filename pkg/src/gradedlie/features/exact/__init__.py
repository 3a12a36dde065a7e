"""Exact scalars in Q(sqrt 2) and small-matrix linear algebra."""

from .linalg import (
    EchelonSpan,
    normalize_leading,
    nullspace,
    rank,
    rref,
    same_span,
    span_basis,
)
from .matrix import Matrix, linear_combination, mat_mul, matrix_unit
from .scalar import ONE, SQRT2, Scalar

__all__ = [
    "EchelonSpan",
    "Matrix",
    "ONE",
    "SQRT2",
    "Scalar",
    "linear_combination",
    "mat_mul",
    "matrix_unit",
    "normalize_leading",
    "nullspace",
    "rank",
    "rref",
    "same_span",
    "span_basis",
]
