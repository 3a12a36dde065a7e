"""Constructors for every algebra family, producing homogeneous bases."""

from .basis import AlgebraBasis, sort_key
from .blocks import SO_Q_FLIPPED_BLOCKS, BlockForm, flip_blocks, osp_form, so_q_form
from .builders import (
    build,
    canonical_partition,
    cartan_basis,
    classical_so_odd,
    desk_scale_specs,
    diagonal_difference,
    dims_formula_so_q,
    form_condition,
    graded_nullspace,
    is_canonical_osp,
    matches_classical_after_flip,
    printed_dim_00_so_q,
    self_check,
    trace_constraint,
)

__all__ = [
    "AlgebraBasis",
    "BlockForm",
    "SO_Q_FLIPPED_BLOCKS",
    "build",
    "canonical_partition",
    "cartan_basis",
    "classical_so_odd",
    "desk_scale_specs",
    "diagonal_difference",
    "dims_formula_so_q",
    "flip_blocks",
    "form_condition",
    "graded_nullspace",
    "is_canonical_osp",
    "matches_classical_after_flip",
    "osp_form",
    "printed_dim_00_so_q",
    "self_check",
    "so_q_form",
    "sort_key",
    "trace_constraint",
]
