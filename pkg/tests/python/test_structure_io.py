"""
Tests for structure file persistence.

Test Categories:
1. Loading Tests - Bundled names, validation errors, bimorphism files
2. Canonical Writer Tests - Byte-stable output and round trips
"""

import json

import pytest
from pydantic import ValidationError

from src.algebra.errors import StructureError
from src.algebra.finite_q import strict_chain, tau_finite
from src.utils.structure_io import (
    dump_structure,
    load_bimorphism,
    load_semigroup,
    load_structure,
    resolve_path,
    save_structure,
)


class TestLoading:
    """Reading structure and bimorphism files."""

    def test_bundled_name_resolves(self):
        """A bare file name falls back to the bundled structures."""
        path = resolve_path("strict3.json")

        assert path.name == "strict3.json"
        assert path.exists()

    def test_missing_file(self):
        """Missing files are structural errors."""
        with pytest.raises(StructureError, match="No such structure file"):
            resolve_path("does-not-exist.json")

    def test_invalid_json(self, tmp_path):
        """Malformed JSON is a structural error."""
        path = tmp_path / "broken.json"
        path.write_text("{")

        with pytest.raises(StructureError, match="not valid JSON"):
            load_structure(path)

    def test_bad_zero_label(self, tmp_path):
        """The zero must be one of the labels."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"name": "bad", "elements": ["0"], "zero": "z", "add": [[0]], "leq": [[1]]}))

        with pytest.raises(ValidationError, match="zero"):
            load_structure(path)

    def test_load_semigroup(self):
        """strict3 loads as a Q-semigroup that is not Cu."""
        s = load_semigroup("strict3.json")

        assert s.labels == ("0", "1", "2")
        assert not s.is_cu

    def test_load_bimorphism(self):
        """Bimorphism files carry three structures and a table."""
        bimorphism = load_bimorphism("e0_diagonal.json")

        assert bimorphism.target.name == "E0+E0"
        assert bimorphism.table == [[0, 0], [0, 3]]

    def test_bimorphism_table_shape(self, tmp_path):
        """The table must be |S| x |T|."""
        data = json.loads(resolve_path("e0_omega.json").read_text())
        data["table"] = [[0, 0]]
        path = tmp_path / "short.json"
        path.write_text(json.dumps(data))

        with pytest.raises(ValidationError, match="table must be 2x2"):
            load_bimorphism(path)


class TestCanonicalWriter:
    """dump_structure and save_structure."""

    def test_bundled_file_is_canonical(self):
        """Dumping a loaded file reproduces it byte for byte."""
        path = resolve_path("strict3.json")

        assert dump_structure(load_structure(path)) == path.read_text(encoding="utf-8")

    def test_rows_on_one_line(self):
        """Tables are written one row per line with sorted keys."""
        text = dump_structure(load_structure("strict3.json"))

        assert '    [0,1,2],\n' in text
        assert text.index('"add"') < text.index('"aux"') < text.index('"elements"')
        assert text.endswith("}\n")

    def test_save_round_trip(self, tmp_path):
        """save_structure writes a file that loads back to the same semigroup."""
        # Given
        cu = tau_finite(strict_chain(3).as_cu()).cu

        # When
        path = save_structure(cu, tmp_path / "out" / "tau.json")

        # Then
        assert path.exists()
        assert load_semigroup(path).same_as(cu)

    def test_cu_structures_omit_aux(self, tmp_path):
        """Cu-semigroups are written without an aux table."""
        path = save_structure(strict_chain(3).as_cu(), tmp_path / "cu.json")

        assert '"aux"' not in path.read_text(encoding="utf-8")
