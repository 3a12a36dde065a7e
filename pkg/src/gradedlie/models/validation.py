"""Report models for the invariant suites."""

from typing import List

from pydantic import BaseModel, Field


class CheckFailure(BaseModel):
    """Model representing a failed invariant."""

    code: str = Field(..., description="Failure code")
    message: str = Field(..., description="Human-readable failure message")
    field: str = Field(..., description="Algebra or object the check ran on")

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "code": "JACOBI_FAILED",
                "message": "Jacobi identity fails for basis elements (3, 4, 7)",
                "field": "so_q(3,1)",
            }
        }


class CheckWarning(BaseModel):
    """Model representing a non-fatal finding."""

    code: str = Field(..., description="Warning code")
    message: str = Field(..., description="Human-readable warning message")
    field: str = Field(..., description="Algebra or object the check ran on")

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "code": "PRINTED_DIM_FORMULA_MISMATCH",
                "message": "Printed dim g_(0,0) formula gives -1, brute force gives 7",
                "field": "so_q(3,1)",
            }
        }


class SuiteResult(BaseModel):
    """Model representing one invariant suite run on one algebra."""

    name: str = Field(..., description="Suite name")
    target: str = Field(..., description="Algebra or family the suite ran on")
    checked: int = Field(0, ge=0, description="Number of cases evaluated")
    failures: List[CheckFailure] = Field(default_factory=list, description="Failed cases")
    warnings: List[CheckWarning] = Field(default_factory=list, description="Warnings")

    @property
    def passed(self) -> bool:
        return not self.failures


class VerificationReport(BaseModel):
    """Model representing the outcome of all invariant suites."""

    is_valid: bool = Field(..., description="Whether every suite passed")
    suites: List[SuiteResult] = Field(default_factory=list, description="Suite results")
    warnings: List[CheckWarning] = Field(
        default_factory=list, description="Warnings collected from all suites"
    )

    class Config:
        """Pydantic config."""

        json_schema_extra = {
            "example": {
                "is_valid": True,
                "suites": [
                    {
                        "name": "jacobi",
                        "target": "so_q(2,1)",
                        "checked": 1000,
                        "failures": [],
                        "warnings": [],
                    }
                ],
                "warnings": [],
            }
        }
