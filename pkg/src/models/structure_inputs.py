"""
Structure File and Validation Report Models for cuntzlab

This module defines the JSON format for finite ordered monoids with an
auxiliary relation, and the reports returned by the law and axiom checkers.

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra (src/algebra/core_order.py)
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
- A finite structure is given by tables: addition, order, auxiliary relation
- Pydantic catches STRUCTURAL problems (wrong dimensions, bad indices)
- Law violations (non-associative addition, non-transitive order) are not
  errors: they are the result of a check and come back as report data
- Every witness is a tuple of element labels, so reports are machine-readable

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator


class StructureFile(BaseModel):
    """
    A finite positively ordered monoid, optionally with an auxiliary relation.

    WHAT: The on-disk description of a finite (Q-)semigroup
    WHY: One diffable JSON format for the CLI, golden files and tests
    VALIDATES:
        - Element labels are non-empty and unique
        - zero is one of the labels
        - add is an n x n table of indices in range
        - leq and aux are n x n tables of 0/1 flags

    USAGE EXAMPLE:
        structure = StructureFile(
            name="E1",
            elements=["0", "1", "inf"],
            zero="0",
            add=[[0, 1, 2], [1, 2, 2], [2, 2, 2]],
            leq=[[1, 1, 1], [0, 1, 1], [0, 0, 1]],
        )
    """

    name: str = Field(..., min_length=1, description="Display name of the structure")

    elements: list[str] = Field(..., min_length=1, description="Element labels in table order")

    zero: str = Field(..., description="Label of the neutral element")

    add: list[list[int]] = Field(..., description="Addition table: add[i][j] is the index of elements[i] + elements[j]")

    leq: list[list[int]] = Field(..., description="Order table: leq[i][j] == 1 iff elements[i] <= elements[j]")

    aux: list[list[int]] | None = Field(
        default=None,
        description="Auxiliary relation table (aux[i][j] == 1 iff elements[i] < elements[j] in the Q-structure); defaults to leq",
    )

    @field_validator("elements")
    @classmethod
    def labels_must_be_unique(cls, v: list[str]) -> list[str]:
        """Labels identify elements in witnesses, so they must be unique and non-blank."""
        if any(not label.strip() for label in v):
            raise ValueError("Element labels must be non-empty strings.")
        if len(set(v)) != len(v):
            duplicates = sorted({label for label in v if v.count(label) > 1})
            raise ValueError(f"Element labels must be unique; duplicated: {', '.join(duplicates)}")
        return v

    @model_validator(mode="after")
    def validate_tables(self) -> "StructureFile":
        """Check table dimensions, index ranges and flag values."""
        n = len(self.elements)
        if self.zero not in self.elements:
            raise ValueError(f"zero {self.zero!r} is not one of the element labels.")

        if len(self.add) != n or any(len(row) != n for row in self.add):
            raise ValueError(f"add must be a {n}x{n} table.")
        for i, row in enumerate(self.add):
            for j, value in enumerate(row):
                if not 0 <= value < n:
                    raise ValueError(f"add[{i}][{j}] = {value} is not an element index (0..{n - 1}).")

        tables = {"leq": self.leq}
        if self.aux is not None:
            tables["aux"] = self.aux
        for table_name, table in tables.items():
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{table_name} must be a {n}x{n} table.")
            if any(value not in (0, 1) for row in table for value in row):
                raise ValueError(f"{table_name} entries must be 0 or 1.")

        return self

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "name": "E0",
                    "elements": ["0", "inf"],
                    "zero": "0",
                    "add": [[0, 1], [1, 1]],
                    "leq": [[1, 1], [0, 1]],
                }
            ]
        }
    }


class LawViolation(BaseModel):
    """
    One violated law with its first witness.

    WHAT: Which law failed and on which elements
    WHY: Golden tests compare witnesses, not prose
    """

    law: str = Field(..., description="Law identifier, e.g. 'antisymmetry' or 'aux_additive'")

    witness: list[str] = Field(..., description="Element labels of the first counterexample found")

    occurrences: int = Field(default=1, ge=1, description="Number of counterexamples found for this law")

    description: str = Field(default="", description="Human-readable statement of the failed law")


class ValidationReport(BaseModel):
    """
    Result of validating a finite structure against a family of laws.

    WHAT: Every violated law with a witness; empty means the structure is valid
    WHY: validate_pom and validate_aux share one report shape

    EDUCATIONAL NOTE:
    is_valid is derived from the violations list, never set by hand.
    """

    subject: str = Field(..., description="Name of the validated structure")

    checked: Literal["pom", "aux"] = Field(..., description="Which family of laws was checked")

    carrier_size: int = Field(..., ge=1, description="Number of elements")

    violations: list[LawViolation] = Field(default_factory=list)

    is_valid: bool = Field(default=True, description="True iff no law is violated")

    @model_validator(mode="after")
    def derive_validity(self) -> "ValidationReport":
        self.is_valid = not self.violations
        return self

    def laws(self) -> list[str]:
        return [violation.law for violation in self.violations]


class StructureCheck(BaseModel):
    """
    `validate FILE`: both law families for one structure file.

    WHAT: The pom report, the auxiliary-relation report and whether the
          file describes a finite Cu-semigroup (aux = leq)
    """

    subject: str

    pom: ValidationReport

    aux: ValidationReport

    is_cu: bool = Field(..., description="True iff no aux table is given or it equals leq")

    @property
    def passed(self) -> bool:
        return self.pom.is_valid and self.aux.is_valid

    def witnesses(self) -> list[LawViolation]:
        return self.pom.violations + self.aux.violations


class AxiomViolation(BaseModel):
    """A tuple of labels for which O5 or O6 fails."""

    axiom: Literal["O5", "O6"]

    witness: list[str] = Field(
        ...,
        description="O5: (a', a, b', b, c); O6: (a', a, b, c)",
    )


class AxiomReport(BaseModel):
    """
    Result of an exhaustive O5/O6 scan over a finite carrier.

    WHAT: Every failing tuple, in lexicographic label-index order
    WHY: An empty list certifies the axiom on this finite carrier
    """

    subject: str

    axiom: Literal["O5", "O6"]

    carrier_size: int = Field(..., ge=1)

    violations: list[AxiomViolation] = Field(default_factory=list)

    holds: bool = Field(default=True)

    @model_validator(mode="after")
    def derive_holds(self) -> "AxiomReport":
        self.holds = not self.violations
        return self

    def witnesses(self) -> list[tuple[str, ...]]:
        return [tuple(v.witness) for v in self.violations]


class AxiomScanReport(BaseModel):
    """`axioms FILE --check o5,o6`: one AxiomReport per requested axiom."""

    subject: str

    reports: list[AxiomReport]

    @property
    def holds(self) -> bool:
        return all(report.holds for report in self.reports)


__all__ = [
    "StructureFile",
    "LawViolation",
    "ValidationReport",
    "StructureCheck",
    "AxiomViolation",
    "AxiomReport",
    "AxiomScanReport",
]
