"""
Path Models for cuntzlab

Vocabularies and summaries for rationally indexed paths.

ARCHITECTURE NOTE:
These models represent Layer 1 of our 3-layer architecture:
    Layer 1: Pydantic Models (THIS FILE) - Data validation
    Layer 2: Calculator Classes - Exact algebra (src/algebra/paths.py)
    Layer 3: CLI Interface - Command-line front end

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from enum import Enum

from pydantic import BaseModel, Field


class Comparison(str, Enum):
    """Outcome of comparing two path classes."""

    LE = "LE"
    NLE = "NLE"
    UNKNOWN = "UNKNOWN"


class Decision(str, Enum):
    """Outcome of a way-below test between path classes."""

    TRUE = "TRUE"
    FALSE = "FALSE"
    UNKNOWN = "UNKNOWN"


class PathClassSummary(BaseModel):
    """
    Canonical form of a path class.

    WHAT: Eventual value (finite carriers) or (endpoint, attained)
          (classifiable carriers); unclassified otherwise
    WHY: Two paths are equivalent iff their summaries agree
    """

    carrier: str

    path: str = Field(..., description="The path in textual syntax")

    classified: bool

    value: str | None = Field(default=None, description="Eventual value or endpoint")

    attained: bool | None = Field(default=None, description="Whether the endpoint is a value of the path")


class PathComparisonReport(BaseModel):
    """Both comparisons and both way-below tests between two paths."""

    carrier: str

    left: PathClassSummary

    right: PathClassSummary

    left_le_right: Comparison

    right_le_left: Comparison

    left_waybelow_right: Decision

    right_waybelow_left: Decision


__all__ = [
    "Comparison",
    "Decision",
    "PathClassSummary",
    "PathComparisonReport",
]
