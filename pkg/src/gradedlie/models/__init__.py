"""Pydantic models for gradedlie documents and reports."""

from .algebra import (
    AlgebraDocument,
    AlgebraFamily,
    AlgebraSpec,
    BasisElementModel,
    ClosureDocument,
    GeneratorSetDocument,
    MatrixEntry,
    ScalarModel,
)
from .relations import RelationFailure, RelationReport, RelationSet
from .structure import (
    RootRow,
    RootTableDocument,
    StructureConstantRecord,
    StructureConstantsDocument,
)
from .validation import (
    CheckFailure,
    CheckWarning,
    SuiteResult,
    VerificationReport,
)

__all__ = [
    "AlgebraFamily",
    "AlgebraSpec",
    "ScalarModel",
    "MatrixEntry",
    "BasisElementModel",
    "AlgebraDocument",
    "ClosureDocument",
    "GeneratorSetDocument",
    "RootRow",
    "RootTableDocument",
    "StructureConstantRecord",
    "StructureConstantsDocument",
    "RelationSet",
    "RelationFailure",
    "RelationReport",
    "CheckFailure",
    "CheckWarning",
    "SuiteResult",
    "VerificationReport",
]
