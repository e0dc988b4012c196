"""
Tests for the golden fact table of catalog Cu-semirings.

Test Categories:
1. Fact Table Tests - Loading, row lookup, family keys
2. Implication Tests - Consistency of the solidness statuses
3. Catalog Listing Tests - `catalog list` and `catalog show`
"""

import pytest
from pydantic import ValidationError

from src.algebra.errors import PreconditionError
from src.algebra.semiring_facts import (
    catalog_listing,
    describe_carrier,
    fact_key,
    fact_table,
    facts,
    family_key,
    implication_violations,
)
from src.models.catalog_inputs import FactFlag, Provenance, SemiringFacts


def make_row(**statuses: bool | None) -> SemiringFacts:
    flag = FactFlag(value=True, citation="test row")
    char_solid = {i: FactFlag(value=statuses.get(f"s{i}"), citation="test row") for i in range(1, 6)}
    return SemiringFacts(
        name="test",
        has_product=flag,
        satisfies_o5=flag,
        satisfies_o6=flag,
        char_solid=char_solid,
    )


class TestFactTable:
    """Loading rows and mapping names onto them."""

    def test_rows_load(self):
        """The golden file validates into SemiringFacts rows."""
        table = fact_table()

        assert {"Nbar", "E<k>", "Pbar", "M1", "Hex"} <= set(table)
        assert all(isinstance(row, SemiringFacts) for row in table.values())

    @pytest.mark.parametrize(
        "name,key",
        [("E3", "E<k>"), ("E0", "E<k>"), ("R{2,3}", "R{p,...}"), ("Pbar", "Pbar"), ("Q", "Q")],
    )
    def test_fact_key(self, name, key):
        """Concrete names map onto their family row."""
        assert fact_key(name) == key

    def test_family_key(self):
        """Powers and matrix carriers map onto their description family."""
        assert family_key("Nbar^3") == "Nbar^k"
        assert family_key("Mat[2,3]") == "Mat[l,k]"

    def test_pbar_row(self):
        """Pbar is solid with a soft unit."""
        row = facts("Pbar")

        assert row.solid.value is True
        assert row.unit_compact.value is False
        assert row.status(4) is False

    def test_default_provenance(self):
        """Flags without a provenance come from the literature."""
        row = facts("Pbar")

        assert row.has_product.provenance is Provenance.LITERATURE
        assert facts("Nbar").char_solid[2].provenance is Provenance.DERIVED

    def test_unknown_row(self):
        """Unknown names have no row."""
        with pytest.raises(PreconditionError, match="No fact row"):
            facts("Foo")

    def test_char_solid_keys(self):
        """Statuses are numbered 1 to 5."""
        flag = FactFlag(value=True, citation="x")

        with pytest.raises(ValidationError, match="keys 1..5"):
            SemiringFacts(name="bad", has_product=flag, satisfies_o5=flag, satisfies_o6=flag, char_solid={1: flag})


class TestImplications:
    """(2)=>(1), (2)=>(3), (4)=>(3), (4)<=>(5), (1)&(3)=>(2)."""

    def test_golden_rows_are_consistent(self):
        """No row of the golden table breaks an implication."""
        assert all(implication_violations(row) == [] for row in fact_table().values())

    def test_four_without_five(self):
        """(4) without (5) is reported."""
        row = make_row(s1=True, s2=True, s3=True, s4=True, s5=False)

        assert implication_violations(row) == ["(4) => (5)"]

    def test_one_and_three_force_two(self):
        """(1) and (3) without (2) is reported."""
        row = make_row(s1=True, s2=False, s3=True)

        assert implication_violations(row) == ["(1) & (3) => (2)"]

    def test_unsettled_statuses_are_skipped(self):
        """None never triggers an implication."""
        assert implication_violations(make_row()) == []


class TestCatalogListing:
    """catalog list / catalog show."""

    def test_listing_names_every_family(self):
        """Every family appears with a description."""
        names = [entry.name for entry in catalog_listing().entries]

        assert "Nbar" in names
        assert "Mat[l,k]" in names
        assert "Hex" in names

    def test_describe_finite_carrier(self):
        """Finite carriers list every element."""
        entry = describe_carrier("E2")

        assert entry.elements == ["0", "1", "2", "inf"]
        assert entry.sample is None
        assert entry.unit == "1"
        assert entry.facts.name == "E<k>"

    def test_describe_infinite_carrier(self):
        """Infinite carriers show a sample starting at zero."""
        entry = describe_carrier("M1", sample_size=5)

        assert entry.elements is None
        assert entry.sample[0] == "0"
        assert len(entry.sample) == 5

    def test_describe_carrier_without_row(self):
        """Rectangular matrices have no unit and no fact row."""
        entry = describe_carrier("Mat[2,3]")

        assert entry.unit is None
        assert entry.facts is None
        assert "matrices" in entry.description
