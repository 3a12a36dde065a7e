"""Pydantic models for root tables and structure constants."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ..features.grading import SignConvention
from .algebra import AlgebraSpec, MatrixEntry, ScalarModel


class RootRow(BaseModel):
    """Model of one root with its degree and root vector."""

    root: List[int] = Field(..., description="Coordinates over the dual basis")
    label: str = Field(..., description="Readable form, e.g. eps1-eps2")
    degree: str = Field(..., description="Degree of the root space")
    vector: List[MatrixEntry] = Field(default_factory=list, description="Root vector entries")

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "root": [1, 0],
                "label": "eps1",
                "degree": "01",
                "vector": [
                    {"row": 1, "col": 5, "value": {"r": "1/1", "s": "0/1"}},
                    {"row": 5, "col": 3, "value": {"r": "-1/1", "s": "0/1"}},
                ],
            }
        }


class RootTableDocument(BaseModel):
    """Model of the root decomposition written by the roots verb."""

    spec: AlgebraSpec = Field(..., description="Algebra that was decomposed")
    coordinates: str = Field(..., description="Dual basis name, eps or delta")
    rank: int = Field(..., description="Dimension of the Cartan subalgebra")
    roots: List[RootRow] = Field(default_factory=list, description="All nonzero roots")
    positive: Dict[str, List[str]] = Field(
        default_factory=dict, description="Positive root labels by degree"
    )
    simple: List[RootRow] = Field(default_factory=list, description="Simple roots in order")
    matches_expected: Optional[bool] = Field(
        None, description="Whether the table equals the known one, if one is known"
    )


class StructureConstantRecord(BaseModel):
    """Model of one nonzero structure constant c_{alpha beta}^gamma."""

    alpha: int = Field(..., ge=1, description="First basis index, 1-based")
    beta: int = Field(..., ge=1, description="Second basis index, 1-based")
    gamma: int = Field(..., ge=1, description="Result basis index, 1-based")
    value: ScalarModel = Field(..., description="Exact coefficient")


class StructureConstantsDocument(BaseModel):
    """Model of a sparse structure-constant file."""

    spec: Optional[AlgebraSpec] = Field(None, description="Algebra the constants belong to")
    convention: SignConvention = Field(..., description="Bracket sign convention")
    dimension: int = Field(..., ge=0, description="Number of basis elements")
    degrees: List[str] = Field(default_factory=list, description="Degree of every basis element")
    records: List[StructureConstantRecord] = Field(
        default_factory=list, description="Nonzero constants sorted by (alpha, beta, gamma)"
    )

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "spec": {"family": "gl_pqrs", "params": [1, 1, 0, 0]},
                "convention": "lie_algebra",
                "dimension": 4,
                "degrees": ["00", "01", "01", "00"],
                "records": [
                    {"alpha": 2, "beta": 3, "gamma": 1, "value": {"r": "1/1", "s": "0/1"}}
                ],
            }
        }
