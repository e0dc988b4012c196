"""
Worked-Example Reproduction Models for cuntzlab

The golden file data/repro/golden.yaml lists worked examples with the value
each one must produce. These models load that file and carry the outcome of
re-running a case.

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra (src/algebra/repro.py)
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL NOTE:
Expected values are plain YAML scalars, lists and mappings. The producing
computation returns the same shape, so a case passes by equality and a
failing case can print both sides without any custom formatting.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from typing import Any

from pydantic import BaseModel, Field, field_validator

from src.models.catalog_inputs import Provenance


class ReproCase(BaseModel):
    """
    One golden worked example.

    WHAT: id, description, provenance, citation and the expected value
    WHY: `repro ID` prints the citation next to the verdict
    VALIDATES:
        - id uses letters, digits and dashes only
        - citation is non-empty
    """

    id: str = Field(..., min_length=1, description="Slug, e.g. 'ihom-E2-E3'")

    description: str = Field(..., min_length=1)

    provenance: Provenance

    citation: str = Field(..., min_length=1, description="Statement the expected value is taken from")

    expected: Any = Field(..., description="Scalar, list or mapping compared by equality")

    @field_validator("id")
    @classmethod
    def id_is_slug(cls, v: str) -> str:
        allowed = set("abcdefghijklmnopqrstuvwxyz0123456789-ABCDEFGHIJKLMNOPQRSTUVWXYZ")
        if not set(v) <= allowed:
            raise ValueError(f"Case ids use letters, digits and dashes only, got {v!r}")
        return v

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "id": "ihom-E2-E3",
                    "description": "[[E2,E3]] by finite enumeration",
                    "provenance": "LITERATURE",
                    "citation": "[[E_k,E_l]] = {0, ceil((l+1)/(k+1)), ..., l, inf}",
                    "expected": "{0,2,3,inf}",
                }
            ]
        }
    }


class ReproResult(BaseModel):
    """Outcome of re-running one ReproCase."""

    id: str

    description: str

    provenance: Provenance

    citation: str

    expected: Any

    actual: Any = Field(default=None, description="Value produced by the computation (None on error)")

    error: str | None = Field(default=None, description="Exception text if the computation raised")

    passed: bool


class ReproReport(BaseModel):
    """Results of `repro ID` or `repro --all`, in golden-file order."""

    results: list[ReproResult]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> list[str]:
        return [result.id for result in self.results if not result.passed]


__all__ = [
    "ReproCase",
    "ReproResult",
    "ReproReport",
]
