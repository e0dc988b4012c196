"""
Bivariant Semigroup Report Models for cuntzlab

Summaries of hom monoids and bivariant Cu-semigroups, and the reports of
the adjunction, ideal, bimodule and ideal-lattice checks.

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra (src/algebra/bivariant.py,
             src/algebra/bivariant_checks.py)
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL NOTE:
Reports carry counts and witnesses, never raw morphism objects. A witness
is always a list of element labels so the CLI can print it and the JSON
output stays diffable.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from enum import Enum

from pydantic import BaseModel, Field

from src.models.finite_inputs import IdealSummary
from src.models.structure_inputs import StructureFile


class BivariantKind(str, Enum):
    """How a bivariant semigroup was obtained."""

    FINITE = "finite"
    CLOSED = "closed"


class HomSummary(BaseModel):
    """
    The hom Q-semigroup Cu[S,T] of a finite pair.

    WHAT: Every generalized Cu-morphism S -> T as a value table
    WHY: The finite engine's raw material; tau of this is [[S,T]]
    """

    source: str

    target: str

    generators: list[str] = Field(..., description="Greedy generating set of S (labels)")

    labels: list[str] = Field(..., description="Morphism labels, in enumeration order")

    morphisms: list[dict[str, str]] = Field(..., description="Each morphism as label of s -> label of phi(s)")

    count: int = Field(..., ge=1)


class BivariantSummary(BaseModel):
    """
    A bivariant Cu-semigroup [[S,T]].

    WHAT: Its carrier, element list (finite) or closed-form name
    WHY: `bivariant --catalog E2 E3` prints `elements` as {0,2,3,inf}
    """

    source: str

    target: str

    kind: BivariantKind

    carrier: str = Field(..., description="Name of the carrier realising [[S,T]]")

    elements: list[str] | None = Field(default=None, description="Element labels (finite engine only)")

    structure: StructureFile | None = Field(default=None, description="Full tables (finite engine only)")

    citation: str | None = Field(default=None, description="Where a closed form comes from")

    def display(self) -> str:
        if self.elements is not None:
            return "{" + ",".join(self.elements) + "}"
        return self.carrier


class OperationResult(BaseModel):
    """Outcome of compose/evaluate/tensor on explicit elements."""

    operation: str

    inputs: list[str]

    result: str

    space: str = Field(..., description="Where the result lives")


class CompactMorphismReport(BaseModel):
    """Cu(S,T) read off as the compact elements of [[S,T]]."""

    source: str

    target: str

    exhaustive: bool = Field(..., description="False when only sampled elements were inspected")

    elements: list[str]


class AdjunctionReport(BaseModel):
    """
    Finite certificate for Cu(S,[[T,P]]) = CuBimor(S x T, P) (= Cu(S (x) T, P)).

    WHAT: The three cardinalities and whether alpha -> ((a,b) -> sigma(alpha(a))(b))
          is an order-isomorphism
    WHY: The internal-hom adjunction, checked exhaustively on small carriers
    """

    source: str

    middle: str

    target: str

    hom_side_count: int = Field(..., ge=0, description="|Cu(S, [[T,P]])|")

    bimorphism_count: int = Field(..., ge=0, description="|CuBimor(S x T, P)|")

    tensor_side_count: int | None = Field(default=None, description="|Cu(S (x) T, P)| when the tensor resolves")

    bijective: bool

    order_isomorphism: bool

    tensor_leg_checked: bool = False

    tensor_leg_holds: bool | None = None

    failure: list[str] | None = Field(default=None, description="Labels witnessing the first failure")

    @property
    def passed(self) -> bool:
        return self.bijective and self.order_isomorphism and self.tensor_leg_holds is not False


class IdealEmbedReport(BaseModel):
    """
    [[S,J]] (or [[S/J,T]]) inside [[S,T]].

    WHAT: Whether the induced map is an order-embedding onto a downward
          hereditary submonoid, and whether the image is exactly the
          elements whose morphism lands in J (or vanishes on J)
    """

    kind: str = Field(..., description="'ideal' for [[S,J]], 'quotient' for [[S/J,T]]")

    source: str

    target: str

    ideal: IdealSummary

    sub_count: int = Field(..., ge=0)

    ambient_count: int = Field(..., ge=1)

    image: list[str]

    order_embedding: bool

    downward_hereditary: bool

    submonoid: bool

    characterization_holds: bool

    failure: list[str] | None = None

    @property
    def proper(self) -> bool:
        return self.sub_count < self.ambient_count

    @property
    def passed(self) -> bool:
        return self.order_embedding and self.downward_hereditary and self.submonoid and self.characterization_holds


class IdealLatticeEntry(BaseModel):
    """(J, K) -> [[S/J, K]] for one pair of ideals."""

    source_ideal: list[str]

    target_ideal: list[str]

    image: list[str]


class IdealLatticeReport(BaseModel):
    """The map Lat(S)^op x Lat(T) -> Lat([[S,T]]) on a finite instance."""

    source: str

    target: str

    entries: list[IdealLatticeEntry]

    lattice_size: int = Field(..., ge=1, description="Number of ideals of [[S,T]]")

    image_size: int = Field(..., ge=1)

    injective: bool

    surjective: bool


class BimoduleReport(BaseModel):
    """Left/right actions of [[T,T]] and [[S,S]] on [[S,T]] checked on samples."""

    source: str

    target: str

    samples: int = Field(..., ge=0)

    unit_laws: bool

    associative: bool

    compatible: bool = Field(..., description="r1(x r2) = (r1 x) r2")

    failure: list[str] | None = None

    @property
    def passed(self) -> bool:
        return self.unit_laws and self.associative and self.compatible


class SemiringMapReport(BaseModel):
    """pi_R and eps_R on samples: eps o pi = id, pi multiplicative and an order-embedding."""

    name: str

    samples: int = Field(..., ge=1)

    eps_pi_identity: bool

    multiplicative: bool

    order_embedding: bool

    unital: bool

    failure: list[str] | None = None

    @property
    def passed(self) -> bool:
        return self.eps_pi_identity and self.multiplicative and self.order_embedding


class NonSimplicityReport(BaseModel):
    """
    An ideal of [[Sex,Sex]] = Hex that is neither {0} nor everything.

    WHAT: The ideal {x : x <= bound} checked on a rational sample, and the
          dilation factors accepted as compact coordinates
    WHY: A nonzero proper ideal shows that [[S,S]] need not be simple even
         when S is simple
    """

    space: str

    carrier: str

    bound: str = Field(..., description="Largest element of the ideal")

    excluded: str = Field(..., description="An element outside the ideal")

    samples: int = Field(..., ge=1)

    submonoid: bool

    downward_hereditary: bool

    excludes_witness: bool

    carrier_matches: bool = Field(..., description="Dilations by t >= 1 round-trip, dilations by 0 < t < 1 are refused")

    failure: list[str] | None = None

    @property
    def passed(self) -> bool:
        return self.submonoid and self.downward_hereditary and self.excludes_witness and self.carrier_matches


__all__ = [
    "BivariantKind",
    "HomSummary",
    "BivariantSummary",
    "OperationResult",
    "CompactMorphismReport",
    "AdjunctionReport",
    "IdealEmbedReport",
    "IdealLatticeEntry",
    "IdealLatticeReport",
    "BimoduleReport",
    "SemiringMapReport",
    "NonSimplicityReport",
]
