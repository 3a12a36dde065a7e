"""Pydantic models for algebra specifications and basis documents."""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..features.exact import Scalar
from ..features.grading import Degree, SignConvention


class AlgebraFamily(str, Enum):
    """Matrix families with a built-in construction."""

    GL_PQRS = "gl_pqrs"
    SL_PQRS = "sl_pqrs"
    SO_PQRS = "so_pqrs"
    SO_Q = "so_q"
    GL_SUPER = "gl_super"
    SL_SUPER = "sl_super"
    OSP = "osp"

    @property
    def convention(self) -> SignConvention:
        if self in (
            AlgebraFamily.GL_PQRS,
            AlgebraFamily.SL_PQRS,
            AlgebraFamily.SO_PQRS,
            AlgebraFamily.SO_Q,
        ):
            return SignConvention.LIE_ALGEBRA
        return SignConvention.LIE_SUPERALGEBRA

    @property
    def param_names(self) -> List[str]:
        if self in (AlgebraFamily.GL_PQRS, AlgebraFamily.SL_PQRS, AlgebraFamily.SO_PQRS):
            return ["p", "q", "r", "s"]
        if self is AlgebraFamily.SO_Q:
            return ["n", "q"]
        return ["m1", "m2", "n1", "n2"]


class AlgebraSpec(BaseModel):
    """Model identifying one algebra of the catalog."""

    family: AlgebraFamily = Field(..., description="Algebra family")
    params: List[int] = Field(..., description="Family parameters in documented order")
    convention: Optional[SignConvention] = Field(
        None, description="Bracket sign convention; fixed by the family"
    )
    partition: Optional[List[str]] = Field(
        None, description="Index degrees for a general osp, e.g. ['00', '11', ...]"
    )

    @field_validator("partition")
    @classmethod
    def check_partition_labels(cls, v: Optional[List[str]]) -> Optional[List[str]]:
        """Normalize partition labels to the two-bit form."""
        if v is None:
            return v
        return [str(Degree.parse(label)) for label in v]

    @model_validator(mode="after")
    def check_params(self) -> "AlgebraSpec":
        """Check parameter count and ranges for the family."""
        names = self.family.param_names
        if len(self.params) != len(names):
            raise ValueError(
                f"{self.family.value} takes {len(names)} parameters ({', '.join(names)}), "
                f"got {len(self.params)}"
            )
        for name, value in zip(names, self.params):
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")

        if self.family is AlgebraFamily.SO_Q:
            n, q = self.params
            if not 1 <= q <= n - 1:
                raise ValueError(f"so_q requires 1 <= q <= n-1, got n={n}, q={q}")
        elif self.family is AlgebraFamily.OSP:
            _, _, n1, n2 = self.params
            if n1 < 1 or n2 < 1:
                raise ValueError(f"osp requires n1 >= 1 and n2 >= 1, got n1={n1}, n2={n2}")
        elif sum(self.params) == 0:
            raise ValueError("The graded space must have positive dimension")

        if self.convention is None:
            self.convention = self.family.convention
        elif self.convention is not self.family.convention:
            raise ValueError(
                f"{self.family.value} uses the {self.family.convention.value} convention"
            )

        if self.partition is not None:
            if self.family is not AlgebraFamily.OSP:
                raise ValueError("A partition may only be supplied for osp")
            if len(self.partition) != self.size:
                raise ValueError(
                    f"Partition has {len(self.partition)} labels for a matrix of size {self.size}"
                )
        return self

    @property
    def size(self) -> int:
        """Size n of the defining matrices."""
        if self.family is AlgebraFamily.SO_Q:
            return 2 * self.params[0] + 1
        if self.family is AlgebraFamily.OSP:
            m1, m2, n1, n2 = self.params
            return 2 * (m1 + m2) + 1 + 2 * (n1 + n2)
        return sum(self.params)

    @property
    def label(self) -> str:
        return f"{self.family.value}({','.join(str(p) for p in self.params)})"

    @classmethod
    def so_q(cls, n: int, q: int) -> "AlgebraSpec":
        return cls(family=AlgebraFamily.SO_Q, params=[n, q])

    @classmethod
    def osp(cls, n1: int, n2: int, m1: int = 0, m2: int = 0) -> "AlgebraSpec":
        return cls(family=AlgebraFamily.OSP, params=[m1, m2, n1, n2])

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "family": "so_q",
                "params": [3, 1],
                "convention": "lie_algebra",
                "partition": None,
            }
        }


class ScalarModel(BaseModel):
    """Model of the exact number r + s*sqrt(2) with reduced fractions."""

    r: str = Field(..., description="Rational part as p/q")
    s: str = Field(..., description="Coefficient of sqrt(2) as p/q")

    @field_validator("r", "s")
    @classmethod
    def canonical_fraction(cls, v: str) -> str:
        """Reduce to p/q with a positive denominator."""
        value = Fraction(v)
        return f"{value.numerator}/{value.denominator}"

    @classmethod
    def from_scalar(cls, value: Scalar) -> "ScalarModel":
        return cls(**value.to_json())

    def to_scalar(self) -> Scalar:
        return Scalar.from_json({"r": self.r, "s": self.s})

    class Config:
        """Pydantic config."""

        json_schema_extra = {"example": {"r": "0/1", "s": "1/1"}}


class MatrixEntry(BaseModel):
    """Model of one nonzero matrix entry in 1-based matrix-unit notation."""

    row: int = Field(..., ge=1, description="Row index, 1-based")
    col: int = Field(..., ge=1, description="Column index, 1-based")
    value: ScalarModel = Field(..., description="Exact entry value")

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {"row": 1, "col": 5, "value": {"r": "0/1", "s": "1/1"}}
        }


class BasisElementModel(BaseModel):
    """Model of one homogeneous basis element."""

    index: int = Field(..., ge=1, description="Position in the basis, 1-based")
    degree: str = Field(..., description="Degree as two bits")
    entries: List[MatrixEntry] = Field(default_factory=list, description="Nonzero entries")


class AlgebraDocument(BaseModel):
    """Model of a built algebra as written by the build verb."""

    spec: AlgebraSpec = Field(..., description="Algebra that was built")
    size: int = Field(..., description="Matrix size")
    partition: List[str] = Field(..., description="Degree of every index")
    dimension: int = Field(..., description="Total dimension")
    dims: Dict[str, int] = Field(..., description="Dimension of every graded component")
    basis: List[BasisElementModel] = Field(default_factory=list, description="Ordered basis")

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "spec": {"family": "so_q", "params": [2, 1], "convention": "lie_algebra"},
                "size": 5,
                "partition": ["00", "11", "00", "11", "01"],
                "dimension": 10,
                "dims": {"00": 2, "01": 2, "10": 2, "11": 4},
                "basis": [],
            }
        }


class ClosureDocument(BaseModel):
    """Model of the bracket closure of a generating set."""

    source: str = Field(..., description="What the generators are")
    generators: int = Field(..., ge=0, description="Number of generators")
    convention: SignConvention = Field(..., description="Bracket sign convention")
    partition: List[str] = Field(..., description="Degree of every index")
    dimension: int = Field(..., description="Dimension of the closure")
    dims: Dict[str, int] = Field(..., description="Dimension of every graded component")
    matches_build: Optional[bool] = Field(
        None, description="Whether the closure equals the built algebra component by component"
    )
    basis: List[BasisElementModel] = Field(default_factory=list, description="Closure basis")


class GeneratorSetDocument(BaseModel):
    """Model of a generating set read by the generate verb."""

    partition: List[str] = Field(..., description="Degree of every index")
    convention: SignConvention = Field(..., description="Bracket sign convention")
    generators: List[List[MatrixEntry]] = Field(
        default_factory=list, description="Nonzero entries of every generator"
    )

    @field_validator("partition")
    @classmethod
    def check_partition_labels(cls, v: List[str]) -> List[str]:
        return [str(Degree.parse(label)) for label in v]

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "partition": ["00", "01"],
                "convention": "lie_algebra",
                "generators": [[{"row": 1, "col": 2, "value": {"r": "1/1", "s": "0/1"}}]],
            }
        }
