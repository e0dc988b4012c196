"""
Lab Settings Pydantic Models for cuntzlab

This module defines the validated settings that bound every brute-force
computation in the library: morphism enumeration, axiom scans, softness
tests and the rational sampling grid used by path comparisons.

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
- Finite enumeration is exact but grows exponentially with carrier size
- Every limit here turns an unbounded search into a documented refusal
- Predicates that quantify over all k (softness) are only verified up to
  softness_k_test and are labelled "bounded-verified" in reports

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from pydantic import BaseModel, Field


class LabSettings(BaseModel):
    """
    Search limits and sampling parameters.

    WHAT: The knobs that decide how far brute-force checks may go
    WHY: Enumerations are exponential; a refusal with a count estimate is
         better than a computation that never finishes

    USAGE EXAMPLE:
        settings = LabSettings(enumeration_bound=50_000)
        if candidates > settings.enumeration_bound:
            raise BoundExceededError(...)
    """

    enumeration_bound: int = Field(
        default=20_000,
        ge=1,
        description="Maximum number of candidates an enumeration may inspect; also the deepest dyadic level a chain evaluates",
    )

    axiom_carrier_limit: int = Field(
        default=48,
        ge=1,
        description="Largest carrier on which O5/O6 are scanned exhaustively",
    )

    softness_k_test: int = Field(
        default=16,
        ge=1,
        le=4096,
        description="Largest k tried when testing (k+1)a' <= ka for softness",
    )

    sample_denominator: int = Field(
        default=64,
        ge=2,
        description="Largest denominator of the rational grid used for sampled path checks",
    )

    falsifier_bound: int = Field(
        default=3,
        ge=1,
        le=4,
        description="Largest test Cu-semigroup used by the tensor universal-property falsifier",
    )

    sample_seed: int = Field(
        default=20240601,
        description="Seed for every deterministic sample generator",
    )

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "enumeration_bound": 20000,
                    "axiom_carrier_limit": 48,
                    "softness_k_test": 16,
                    "sample_denominator": 64,
                    "falsifier_bound": 3,
                    "sample_seed": 20240601,
                }
            ]
        }
    }


__all__ = ["LabSettings"]
