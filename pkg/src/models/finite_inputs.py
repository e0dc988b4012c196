"""
Finite Q-Semigroup Report Models for cuntzlab

Summaries returned by the finite engine: the tau construction, ideals,
quotients and the coreflection check.

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra (src/algebra/finite_q.py)
    Layer 3: CLI Interface - Command-line front end

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from pydantic import BaseModel, Field

from src.models.structure_inputs import StructureFile


class TauSummary(BaseModel):
    """
    The Cu-semigroup tau(S) of a finite Q-semigroup with its endpoint map.

    WHAT: Carrier {a : a < a}, ordered by the auxiliary relation
    WHY: The endpoint map tau(S) -> S is the inclusion; reporting it makes
         non-surjective endpoint maps visible
    """

    source: str = Field(..., description="Name of the Q-semigroup S")

    structure: StructureFile = Field(..., description="tau(S) as a structure file (aux = leq)")

    endpoint: dict[str, str] = Field(..., description="Label in tau(S) -> label of its endpoint in S")

    endpoint_surjective: bool = Field(..., description="True iff every element of S is self-related")


class IdealSummary(BaseModel):
    """An ideal of a finite Cu-semigroup, recorded with its largest element z_J."""

    members: list[str] = Field(..., min_length=1)

    top: str = Field(..., description="z_J, the sum of all members")


class IdealListing(BaseModel):
    """Every ideal of a finite Cu-semigroup, ordered by size then labels."""

    source: str

    ideals: list[IdealSummary]


class QuotientSummary(BaseModel):
    """A quotient S/J with its projection."""

    source: str

    ideal: IdealSummary

    structure: StructureFile

    projection: dict[str, str] = Field(..., description="Label in S -> label of its class in S/J")


class CoreflectionReport(BaseModel):
    """
    Finite certificate for the coreflection bijection Cu(T, tau(S)) -> Q(T, S).

    WHAT: Both morphism counts, and whether alpha -> endpoint o alpha is an
          order-isomorphism of pointwise-ordered sets
    WHY: Exhaustive evidence that tau is right adjoint to the inclusion
    """

    cu_side: str = Field(..., description="Name of T")

    q_side: str = Field(..., description="Name of S")

    cu_morphism_count: int = Field(..., ge=0)

    q_morphism_count: int = Field(..., ge=0)

    bijective: bool

    order_isomorphism: bool

    failure: list[str] | None = Field(default=None, description="Value table of the first morphism where the check fails")

    @property
    def passed(self) -> bool:
        return self.bijective and self.order_isomorphism


__all__ = [
    "TauSummary",
    "IdealSummary",
    "IdealListing",
    "QuotientSummary",
    "CoreflectionReport",
]
