"""Pydantic models for parastatistics relation reports."""

from enum import Enum
from typing import List

from pydantic import BaseModel, Field

from .algebra import MatrixEntry


class RelationSet(str, Enum):
    """Triple relation systems that can be checked on matrices."""

    PF_SAME = "pf_same"
    PB_SAME = "pb_same"
    REL_CROSS_SO_Q = "rel_cross_so_q"
    REL_CROSS_OSP = "rel_cross_osp"


class RelationFailure(BaseModel):
    """Model of one index and sign choice where a relation does not hold."""

    indices: List[int] = Field(..., description="(j, k, l), 1-based")
    signs: List[int] = Field(..., description="(xi, eta, epsilon) as +1/-1")
    expected: List[MatrixEntry] = Field(default_factory=list, description="Right-hand side")
    got: List[MatrixEntry] = Field(default_factory=list, description="Left-hand side")


class RelationReport(BaseModel):
    """Model of an exhaustive relation check."""

    relation: RelationSet = Field(..., description="Relation system checked")
    checked: int = Field(..., ge=0, description="Number of (indices, signs) cases evaluated")
    failures: List[RelationFailure] = Field(default_factory=list, description="Mismatches")

    @property
    def passed(self) -> bool:
        return not self.failures

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {"relation": "pf_same", "checked": 16, "failures": []}
        }
