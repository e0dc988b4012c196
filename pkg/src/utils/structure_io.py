"""
Structure File Persistence for cuntzlab

Loads and writes the JSON files the CLI works with: finite (Q-)semigroups
and bimorphism tables.

The writer is canonical: keys are sorted, every table row sits on one
line and the file ends with a newline. Writing a loaded file therefore
reproduces it byte for byte, and golden files diff one row at a time.

USAGE EXAMPLE:
    structure = load_structure("strict3.json")    # bundled names work too
    s = FiniteQSemigroup.from_structure(structure)
    save_structure(tau_finite(s).cu.to_structure(), "out/tau.json")

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import json
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from src.algebra.errors import StructureError
from src.algebra.finite_q import FiniteQSemigroup
from src.config import CuntzLabConfig
from src.models.structure_inputs import StructureFile
from src.models.tensor_inputs import BimorphismFile


def resolve_path(path: str | Path) -> Path:
    """
    The file itself if it exists, otherwise the bundled file of that name.

    Raises:
        StructureError: If neither exists
    """
    candidate = Path(path)
    if candidate.exists():
        return candidate
    bundled = CuntzLabConfig.STRUCTURES_DIR / candidate.name
    if bundled.exists():
        return bundled
    raise StructureError(f"No such structure file: {path}")


def _read_json(path: str | Path) -> Any:
    resolved = resolve_path(path)
    try:
        return json.loads(resolved.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise StructureError(f"{resolved} is not valid JSON: {e}") from e


def load_structure(path: str | Path) -> StructureFile:
    """
    Read and validate a structure file.

    Raises:
        StructureError: Missing file or malformed JSON
        pydantic.ValidationError: Wrong table shapes or labels
    """
    return StructureFile.model_validate(_read_json(path))


def load_semigroup(path: str | Path) -> FiniteQSemigroup:
    """
    Read a structure file as a FiniteQSemigroup.

    Raises:
        PreconditionError: If the tables break a pom or auxiliary-relation law
    """
    return FiniteQSemigroup.from_structure(load_structure(path))


def load_bimorphism(path: str | Path) -> BimorphismFile:
    """Read a bimorphism file (three nested structures and omega's table)."""
    return BimorphismFile.model_validate(_read_json(path))


def _compact(value: Any) -> str:
    return json.dumps(value, separators=(",", ":"), ensure_ascii=False)


def _canonical(value: Any, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{_compact(key)}: {_canonical(value[key], indent + 1)}" for key in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list) and value and all(isinstance(row, list) for row in value):
        # tables: one row per line
        return "[\n" + ",\n".join(f"{inner}{_canonical(row, indent + 1)}" for row in value) + "\n" + pad + "]"
    if isinstance(value, list) and any(isinstance(item, dict) for item in value):
        return "[\n" + ",\n".join(f"{inner}{_canonical(item, indent + 1)}" for item in value) + "\n" + pad + "]"
    return _compact(value)


def dump_canonical(model: BaseModel) -> str:
    """Canonical JSON of a model: sorted keys, one row per line, trailing newline."""
    return _canonical(model.model_dump(mode="json", exclude_none=True), 0) + "\n"


def dump_structure(structure: StructureFile) -> str:
    return dump_canonical(structure)


def save_structure(structure: StructureFile | FiniteQSemigroup, path: str | Path) -> Path:
    """Write the canonical form of a structure, creating parent directories."""
    if isinstance(structure, FiniteQSemigroup):
        structure = structure.to_structure()
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dump_structure(structure), encoding="utf-8")
    return target


__all__ = [
    "resolve_path",
    "load_structure",
    "load_semigroup",
    "load_bimorphism",
    "dump_canonical",
    "dump_structure",
    "save_structure",
]
