"""Degrees, sign conventions and index partitions."""

from .degrees import (
    D01,
    D10,
    D11,
    ZERO,
    Degree,
    SignConvention,
    add_degrees,
    all_degrees,
    bracket_sign,
)
from .partitions import DegreePartition, block_degrees, entry_degree

__all__ = [
    "D01",
    "D10",
    "D11",
    "ZERO",
    "Degree",
    "DegreePartition",
    "SignConvention",
    "add_degrees",
    "all_degrees",
    "block_degrees",
    "bracket_sign",
    "entry_degree",
]
