"""
Tests for the worked-example registry.

Test Categories:
1. Golden File Tests - Loading and validating the cases
2. Case Tests - Individual computations against their expected values
3. Runner Tests - Selection by id, failures and error capture
"""

import pytest
from pydantic import ValidationError

from src.algebra.errors import PreconditionError, StructureError
from src.algebra.repro import COMPUTATIONS, load_cases, m1_rule_failure, rational_sample, run_case, run_repro
from src.models.catalog_inputs import Provenance
from src.models.repro_inputs import ReproCase


class TestGoldenFile:
    """data/repro/golden.yaml."""

    def test_every_case_has_a_computation(self):
        """Each golden id is registered."""
        cases = load_cases()

        assert [case.id for case in cases] == list(COMPUTATIONS)

    def test_cases_carry_provenance(self):
        """Citations and provenance tags are present."""
        cases = {case.id: case for case in load_cases()}

        assert cases["ihom-E2-E3"].provenance is Provenance.LITERATURE
        assert cases["matrix-compose"].provenance is Provenance.DERIVED
        assert cases["tau-strict3"].provenance is Provenance.TRIVIAL

    def test_malformed_file(self, tmp_path):
        """The file must be a mapping with a cases list."""
        path = tmp_path / "golden.yaml"
        path.write_text("- id: x\n")

        with pytest.raises(StructureError, match="'cases' list"):
            load_cases(path)

    def test_case_ids_are_slugs(self):
        """Ids use letters, digits and dashes."""
        with pytest.raises(ValidationError, match="dashes only"):
            ReproCase(id="bad id", description="d", provenance="TRIVIAL", citation="c", expected=1)


class TestCases:
    """Single cases."""

    def test_ihom_e2_e3(self):
        """[[E2,E3]] = {0,2,3,inf}."""
        report = run_repro("ihom-E2-E3")

        assert report.passed
        assert report.results[0].actual == "{0,2,3,inf}"

    def test_o5_failure(self):
        """The O5 witness on [[E2,E3]]."""
        report = run_repro("o5-failure")

        assert report.results[0].actual == ["2", "2", "0", "0", "3"]

    def test_m1_rules_on_sample(self):
        """The addition and order rules of M1 hold on fifty rationals."""
        sample = rational_sample()

        assert len(sample) == 50
        assert m1_rule_failure(sample) is None

    def test_wrong_expectation_fails(self):
        """A case whose expected value differs is reported as failed."""
        case = ReproCase(
            id="tau-strict3", description="d", provenance="TRIVIAL", citation="c", expected="{0,1}"
        )

        result = run_case(case)

        assert not result.passed
        assert result.actual == "{0}"

    def test_unregistered_case(self):
        """Cases without a computation fail with an error message."""
        case = ReproCase(id="no-such-case", description="d", provenance="TRIVIAL", citation="c", expected=0)

        result = run_case(case)

        assert not result.passed
        assert "no computation registered" in result.error

    def test_value_error_is_reported(self, monkeypatch, tmp_path):
        """A computation raising ValueError fails its case instead of the run."""
        # Given
        def broken(settings):
            raise ValueError("bad literal")

        monkeypatch.setitem(COMPUTATIONS, "tau-strict3", broken)
        golden = tmp_path / "golden.yaml"
        golden.write_text(
            "cases:\n"
            "  - {id: tau-strict3, description: d, provenance: TRIVIAL, citation: c, expected: \"{0}\"}\n"
            "  - {id: o5-failure, description: d, provenance: TRIVIAL, citation: c, expected: [\"2\", \"2\", \"0\", \"0\", \"3\"]}\n",
            encoding="utf-8",
        )

        # When
        report = run_repro(path=golden)

        # Then
        broken_result, o5_result = report.results
        assert not broken_result.passed
        assert broken_result.error == "bad literal"
        assert o5_result.passed


class TestRunner:
    """run_repro selection."""

    def test_unknown_id(self):
        """Unknown ids list the known ones."""
        with pytest.raises(PreconditionError, match="Unknown repro case 'nope'"):
            run_repro("nope")

    @pytest.mark.slow
    def test_all_cases_pass(self):
        """Every golden case reproduces."""
        report = run_repro()

        assert report.failures() == []
        assert report.passed
        assert len(report.results) == len(COMPUTATIONS)
