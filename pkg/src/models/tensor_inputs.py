"""
Tensor Product Models for cuntzlab

Queries and reports of the tensor module: catalog resolution of S (x) T,
bimorphism files and the universal-property falsifier.

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra (src/algebra/tensor.py)
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL NOTE:
A falsifier report never claims that a tensor product is correct. "No
violation up to bound" only says that every test Cu-semigroup with at most
`bound` elements factors through the offered bimorphism.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from src.models.structure_inputs import StructureFile


class TensorQuery(BaseModel):
    """
    A product of catalog carriers S1 (x) S2 (x) ... (x) Sn.

    WHAT: Catalog names, in the order given on the command line
    WHY: tensor_catalog normalizes the whole list, so the answer cannot
         depend on how the product was bracketed or ordered
    """

    factors: list[str] = Field(..., min_length=2, description="Catalog names, e.g. ['R{2}', 'R{3}']")

    @field_validator("factors")
    @classmethod
    def names_not_blank(cls, v: list[str]) -> list[str]:
        stripped = [name.strip() for name in v]
        if any(not name for name in stripped):
            raise ValueError("Tensor factors must be non-empty catalog names")
        return stripped

    @classmethod
    def of(cls, left: str, right: str) -> "TensorQuery":
        return cls(factors=[left, right])

    model_config = {"json_schema_extra": {"examples": [{"factors": ["R{2}", "R{3}"]}, {"factors": ["E2", "Nbar"]}]}}


class TensorResolution(BaseModel):
    """
    The catalog answer to a TensorQuery.

    WHAT: The resolved carrier and the rewrite rules that produced it
    WHY: `tensor R{2} R{3}` prints the result and the rules it used
    """

    factors: list[str]

    normal_form: list[str] = Field(..., description="Factors left after unit removal and merging")

    result: str = Field(..., description="Catalog name of the tensor product")

    rules: list[str] = Field(default_factory=list, description="Rewrite rules applied, in order")

    simple_tensor: str = Field(default="", description="How s (x) t embeds into the result")


class FalsifierViolation(BaseModel):
    """
    The first failure of the universal property found by the falsifier.

    WHAT: The test semigroup Q, the bimorphism phi and the morphisms involved
    WHY: Every violation can be replayed from the stored tables alone

    kind:
        no_factorization  no alpha: P -> Q with alpha o omega = phi
        not_unique        two different alphas with alpha o omega = phi
        order_reflection  alpha1 o omega <= alpha2 o omega but not alpha1 <= alpha2
    """

    kind: Literal["no_factorization", "not_unique", "order_reflection"]

    test_object: StructureFile = Field(..., description="The finite Cu-semigroup Q")

    phi: list[list[int]] = Field(..., description="phi(a, b) as indices into Q")

    alphas: list[list[int]] = Field(default_factory=list, description="Value tables of the morphisms P -> Q involved")

    message: str = ""


class FalsifierReport(BaseModel):
    """
    Outcome of the universal-property search for (P, omega).

    WHAT: How many test objects and bimorphisms were inspected, and the
          first violation if any
    """

    left: str

    right: str

    candidate: str = Field(..., description="Name of P")

    bound: int = Field(..., ge=1)

    test_objects: int = Field(..., ge=0)

    bimorphisms_checked: int = Field(..., ge=0)

    violation: FalsifierViolation | None = None

    @property
    def passed(self) -> bool:
        return self.violation is None

    def verdict(self) -> str:
        if self.violation is None:
            return f"no violation up to bound {self.bound} (not a proof)"
        return f"violation: {self.violation.kind}"


class BimorphismFile(BaseModel):
    """
    A bimorphism omega: S x T -> P stored as JSON.

    WHAT: The three structure files and omega(a, b) as indices into P
    WHY: Input format of `tensor --falsify FILE`
    VALIDATES:
        - table is |S| x |T|
        - every entry is an element index of P
    """

    left: StructureFile

    right: StructureFile

    target: StructureFile

    table: list[list[int]] = Field(..., description="table[a][b] = index of omega(a, b) in target")

    @model_validator(mode="after")
    def table_matches_structures(self) -> "BimorphismFile":
        rows, cols, size = len(self.left.elements), len(self.right.elements), len(self.target.elements)
        if len(self.table) != rows or any(len(row) != cols for row in self.table):
            raise ValueError(f"table must be {rows}x{cols} (|{self.left.name}| x |{self.right.name}|).")
        for a, row in enumerate(self.table):
            for b, value in enumerate(row):
                if not 0 <= value < size:
                    raise ValueError(f"table[{a}][{b}] = {value} is not an index of {self.target.name}.")
        return self


__all__ = [
    "TensorQuery",
    "TensorResolution",
    "FalsifierViolation",
    "FalsifierReport",
    "BimorphismFile",
]
