"""
Pydantic models for cuntzlab.

This package contains every Pydantic model the library reads or reports.
Models provide type-safe data structures with automatic validation.

Available Models:
    - settings_inputs: Runtime settings (LabSettings)
    - structure_inputs: Structure files and law/axiom reports (StructureFile, ValidationReport, AxiomReport)
    - catalog_inputs: Catalog facts and listings (SemiringFacts, CatalogEntry, SolidStatusReport)
    - finite_inputs: Finite engine summaries (TauSummary, IdealSummary, QuotientSummary, CoreflectionReport)
    - path_inputs: Path comparison results (Comparison, Decision, PathComparisonReport)
    - bivariant_inputs: Hom and bivariant reports (HomSummary, BivariantSummary, AdjunctionReport, etc.)
    - tensor_inputs: Tensor queries and the falsifier (TensorQuery, FalsifierReport, BimorphismFile)
    - repro_inputs: Worked-example registry (ReproCase, ReproResult, ReproReport)
"""

from src.models.settings_inputs import LabSettings

from src.models.structure_inputs import (
    StructureFile,
    LawViolation,
    ValidationReport,
    StructureCheck,
    AxiomViolation,
    AxiomReport,
    AxiomScanReport,
)

from src.models.catalog_inputs import (
    Provenance,
    FactFlag,
    SemiringFacts,
    CatalogEntry,
    CatalogListing,
    SpotCheck,
    SolidStatusReport,
)

from src.models.finite_inputs import (
    TauSummary,
    IdealSummary,
    IdealListing,
    QuotientSummary,
    CoreflectionReport,
)

from src.models.path_inputs import (
    Comparison,
    Decision,
    PathClassSummary,
    PathComparisonReport,
)

from src.models.bivariant_inputs import (
    BivariantKind,
    HomSummary,
    BivariantSummary,
    OperationResult,
    CompactMorphismReport,
    AdjunctionReport,
    IdealEmbedReport,
    IdealLatticeEntry,
    IdealLatticeReport,
    BimoduleReport,
    SemiringMapReport,
    NonSimplicityReport,
)

from src.models.tensor_inputs import (
    TensorQuery,
    TensorResolution,
    FalsifierViolation,
    FalsifierReport,
    BimorphismFile,
)

from src.models.repro_inputs import (
    ReproCase,
    ReproResult,
    ReproReport,
)

__all__ = [
    # Settings
    "LabSettings",
    # Structures
    "StructureFile",
    "LawViolation",
    "ValidationReport",
    "StructureCheck",
    "AxiomViolation",
    "AxiomReport",
    "AxiomScanReport",
    # Catalog
    "Provenance",
    "FactFlag",
    "SemiringFacts",
    "CatalogEntry",
    "CatalogListing",
    "SpotCheck",
    "SolidStatusReport",
    # Finite engine
    "TauSummary",
    "IdealSummary",
    "IdealListing",
    "QuotientSummary",
    "CoreflectionReport",
    # Paths
    "Comparison",
    "Decision",
    "PathClassSummary",
    "PathComparisonReport",
    # Bivariant
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
    # Tensor
    "TensorQuery",
    "TensorResolution",
    "FalsifierViolation",
    "FalsifierReport",
    "BimorphismFile",
    # Worked examples
    "ReproCase",
    "ReproResult",
    "ReproReport",
]
