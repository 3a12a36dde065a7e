"""Root decompositions, bracket closures and structure constants."""

from .closure import canonical_basis, generate_closure
from .constants import (
    StructureConstants,
    antisymmetry_failures,
    constants_from_records,
    flatten_constants,
    jacobi_failures_from_constants,
    rebuild_bracket_from_constants,
    structure_constants,
)
from .roots import (
    Root,
    RootDatum,
    RootSystem,
    compare_root_tables,
    coordinate_name,
    expected_root_table,
    is_positive,
    positive_and_simple_roots,
    root_decomposition,
    root_label,
    simple_root_coefficients,
    weight_of,
)

__all__ = [
    "Root",
    "RootDatum",
    "RootSystem",
    "StructureConstants",
    "antisymmetry_failures",
    "canonical_basis",
    "compare_root_tables",
    "constants_from_records",
    "coordinate_name",
    "expected_root_table",
    "flatten_constants",
    "generate_closure",
    "is_positive",
    "jacobi_failures_from_constants",
    "positive_and_simple_roots",
    "rebuild_bracket_from_constants",
    "root_decomposition",
    "root_label",
    "simple_root_coefficients",
    "structure_constants",
    "weight_of",
]
