"""
Catalog Fact Models for cuntzlab

Golden facts about the catalog Cu-semirings: product and unit, solidness,
the O5/O6 axioms and the five solidness statuses

    (1) R is solid (the multiplication R (x) R -> R is an isomorphism)
    (2) the evaluation [[R,R]] (x) R -> R is an isomorphism
    (3) pi_R (x) id_R is an isomorphism
    (4) pi_R : R -> [[R,R]] is an isomorphism
    (5) eps_R : [[R,R]] -> R is an isomorphism

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra (src/algebra/semiring_facts.py)
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL NOTE:
Every flag carries its provenance and a citation string. A flag whose
value is None is not settled for that carrier and is skipped by the
implication checks.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from enum import Enum

from pydantic import BaseModel, Field, field_validator


class Provenance(str, Enum):
    """Where an expected value comes from."""

    LITERATURE = "LITERATURE"
    DERIVED = "DERIVED"
    TRIVIAL = "TRIVIAL"


class FactFlag(BaseModel):
    """A single cited yes/no/unknown fact."""

    value: bool | None = Field(..., description="True, False or None when not settled")

    provenance: Provenance = Field(default=Provenance.LITERATURE)

    citation: str = Field(..., min_length=1, description="Statement this flag is taken from")


class SemiringFacts(BaseModel):
    """
    Golden fact row for one catalog carrier.

    WHAT: Product, unit, solidness, axioms and the statuses (1)-(5)
    WHY: solid_status and the axiom checkers are tested against this table
    VALIDATES:
        - char_solid has exactly the keys 1..5
        - a carrier without a product has no unit and no statuses
    """

    name: str = Field(..., min_length=1)

    has_product: FactFlag

    unit: str | None = Field(default=None, description="Canonical syntax of the unit, if any")

    unit_compact: FactFlag | None = None

    solid: FactFlag | None = None

    satisfies_o5: FactFlag

    satisfies_o6: FactFlag

    char_solid: dict[int, FactFlag] = Field(default_factory=dict)

    @field_validator("char_solid")
    @classmethod
    def statuses_are_numbered(cls, v: dict[int, FactFlag]) -> dict[int, FactFlag]:
        if v and set(v) != {1, 2, 3, 4, 5}:
            raise ValueError(f"char_solid must have keys 1..5, got {sorted(v)}")
        return v

    def status(self, number: int) -> bool | None:
        flag = self.char_solid.get(number)
        return None if flag is None else flag.value


class CatalogEntry(BaseModel):
    """
    One catalog carrier as shown by `catalog list` and `catalog show NAME`.

    `catalog list` fills name and description only; `show` adds the rest.
    """

    name: str

    description: str

    finite: bool | None = None

    has_product: bool | None = None

    unit: str | None = None

    elements: list[str] | None = Field(default=None, description="Every element (finite carriers)")

    sample: list[str] | None = Field(default=None, description="Deterministic sample (infinite carriers)")

    facts: SemiringFacts | None = None


class CatalogListing(BaseModel):
    """`catalog list`."""

    entries: list[CatalogEntry]


class SpotCheck(BaseModel):
    """One executable spot check inside a larger report."""

    name: str

    passed: bool

    detail: str = ""


class SolidStatusReport(BaseModel):
    """
    Statuses (1)-(5) for a catalog semiring together with executed checks.

    WHAT: Golden statuses, executable spot checks and implication consistency
    WHY: The statuses are facts; the spot checks make them falsifiable
    """

    name: str

    statuses: dict[int, bool | None]

    spot_checks: list[SpotCheck] = Field(default_factory=list)

    implications_consistent: bool

    @property
    def passed(self) -> bool:
        return self.implications_consistent and all(check.passed for check in self.spot_checks)


__all__ = [
    "Provenance",
    "FactFlag",
    "SemiringFacts",
    "CatalogEntry",
    "CatalogListing",
    "SpotCheck",
    "SolidStatusReport",
]
