"""
Tests for the core order layer: finite poms, auxiliary relations and the
O5/O6 scanners.

Test Categories:
1. Pom Construction Tests - Table shapes, labels, structural errors
2. Pom Law Tests - validate_pom witnesses for each broken law
3. Auxiliary Relation Tests - validate_aux witnesses and the sequential way-below
4. Axiom Scanner Tests - O5/O6 on catalog carriers and the bivariant [[E2,E3]]
5. Property Tests - Laws hold on every capped and max chain (hypothesis)
"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.catalog import catalog
from src.algebra.core_order import (
    Pom,
    check_o5,
    check_o6,
    sequential_waybelow,
    validate_aux,
    validate_pom,
    validate_structure,
)
from src.algebra.errors import BoundExceededError, StructureError
from src.algebra.finite_q import capped_chain, max_chain
from src.models.settings_inputs import LabSettings
from src.utils.structure_io import load_structure

E1_ADD = [[0, 1, 2], [1, 2, 2], [2, 2, 2]]
E1_LEQ = [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def make_e1() -> Pom:
    return Pom("E1", ["0", "1", "inf"], "0", E1_ADD, E1_LEQ)


class TestPomConstruction:
    """Structural checks performed when a Pom is built."""

    def test_e1_tables(self):
        """E1 adds 1 + 1 to inf and orders 0 < 1 < inf."""
        e1 = make_e1()

        assert e1.size == 3
        assert e1.label(e1.add(1, 1)) == "inf"
        assert e1.leq(0, 2)
        assert not e1.leq(2, 1)

    def test_index_and_labels(self):
        """Labels map to indices and back."""
        e1 = make_e1()

        assert e1.index("inf") == 2
        assert e1.labels_of([2, 0]) == ["inf", "0"]
        assert e1.parse(" 1 ") == 1

    def test_unknown_label_raises(self):
        """Unknown labels are structural errors."""
        with pytest.raises(StructureError, match="unknown element"):
            make_e1().index("7")

    def test_duplicate_labels_raise(self):
        """Labels must be unique."""
        with pytest.raises(StructureError, match="unique"):
            Pom("bad", ["0", "0"], "0", [[0, 1], [1, 1]], [[1, 1], [0, 1]])

    def test_zero_must_be_a_label(self):
        """The zero label must name an element."""
        with pytest.raises(StructureError, match="zero"):
            Pom("bad", ["0", "1"], "z", [[0, 1], [1, 1]], [[1, 1], [0, 1]])

    def test_wrong_table_shape_raises(self):
        """An addition table of the wrong shape is rejected."""
        with pytest.raises(StructureError, match="shape"):
            Pom("bad", ["0", "1"], "0", [[0, 1]], [[1, 1], [0, 1]])

    def test_index_out_of_range_raises(self):
        """Addition results must be element indices."""
        with pytest.raises(StructureError, match="outside"):
            Pom("bad", ["0", "1"], "0", [[0, 1], [1, 2]], [[1, 1], [0, 1]])

    def test_multiple_and_total(self):
        """k-fold multiples and sums use the carrier addition."""
        e1 = make_e1()
        nbar = catalog("Nbar")

        assert e1.label(e1.multiple(2, 1)) == "inf"
        assert e1.label(e1.total([0, 1])) == "1"
        assert nbar.multiple(5, 3) == 15


class TestPomLaws:
    """validate_pom reports each broken law with its first witness."""

    def test_valid_chain(self):
        """E1 satisfies every pom law."""
        report = validate_pom(make_e1())

        assert report.is_valid
        assert report.violations == []
        assert report.checked == "pom"
        assert report.carrier_size == 3

    def test_add_compatibility_witness(self):
        """Z/2 ordered 0 <= 1 is not compatible with addition."""
        # Given: a group of order two with a nontrivial order
        pom = Pom("Z2", ["0", "1"], "0", [[0, 1], [1, 0]], [[1, 1], [0, 1]])

        # When
        report = validate_pom(pom)

        # Then: 0 <= 1 but 0 + 1 = 1 is not <= 1 + 1 = 0
        assert report.laws() == ["add_compatibility"]
        assert report.violations[0].witness == ["0", "1", "1"]

    def test_antisymmetry_witness(self):
        """A total preorder on two elements breaks antisymmetry only."""
        pom = Pom("flat", ["0", "1"], "0", [[0, 1], [1, 1]], [[1, 1], [1, 1]])

        report = validate_pom(pom)

        assert report.laws() == ["antisymmetry"]
        assert report.violations[0].witness == ["0", "1"]
        assert report.violations[0].occurrences == 2

    def test_commutativity_witness(self):
        """A non-commutative addition table is reported."""
        pom = Pom("skew", ["0", "1", "2"], "0", [[0, 1, 2], [1, 2, 1], [2, 2, 2]], [[1, 1, 1], [0, 1, 1], [0, 0, 1]])

        report = validate_pom(pom)

        assert "commutativity" in report.laws()
        assert report.violations[report.laws().index("commutativity")].witness == ["1", "2"]

    def test_positivity_witness(self):
        """0 must lie below every element."""
        pom = Pom("neg", ["0", "1"], "0", [[0, 1], [1, 1]], [[1, 0], [1, 1]])

        report = validate_pom(pom)

        assert "positivity" in report.laws()
        assert not report.is_valid


class TestAuxRelation:
    """validate_aux and the sequential way-below on finite poms."""

    def test_leq_is_a_valid_aux(self):
        """On a finite Cu-semigroup the order is an auxiliary relation."""
        e1 = make_e1()

        report = validate_aux(e1, e1.leq_table)

        assert report.is_valid
        assert report.checked == "aux"

    def test_empty_relation_breaks_zero_law(self):
        """The empty relation fails only 0 < x."""
        e1 = make_e1()

        report = validate_aux(e1, np.zeros((3, 3), dtype=bool))

        assert report.laws() == ["zero_aux"]
        assert report.violations[0].witness == ["0"]

    def test_full_relation_does_not_refine_order(self):
        """Relating everything breaks x < y implies x <= y."""
        e1 = make_e1()

        report = validate_aux(e1, np.ones((3, 3), dtype=bool))

        assert report.laws() == ["aux_refines_leq"]
        assert report.violations[0].witness == ["1", "0"]

    def test_non_additive_relation(self):
        """1 < 2 on the capped chain forces 2 < 2, which strict relations miss."""
        # Given: capped chain {0,1,2} with k < l iff k < l or k = 0
        cap3 = Pom("cap3", ["0", "1", "2"], "0", [[0, 1, 2], [1, 2, 2], [2, 2, 2]], E1_LEQ)
        rel = np.array([[1, 1, 1], [0, 0, 1], [0, 0, 0]], dtype=bool)

        # When
        report = validate_aux(cap3, rel)

        # Then: 1 < 2 twice would give 1 + 1 < 2 + 2
        assert report.laws() == ["aux_additive"]
        assert report.violations[0].witness == ["1", "2", "1", "2"]

    def test_wrong_shape_raises(self):
        """The relation must be square over the carrier."""
        with pytest.raises(StructureError, match="shape"):
            validate_aux(make_e1(), np.ones((2, 2), dtype=bool))

    def test_sequential_waybelow_equals_order(self):
        """In a finite poset every element is compact."""
        e1 = make_e1()

        assert np.array_equal(sequential_waybelow(e1), e1.leq_table)

    def test_validate_structure_file(self):
        """strict3 is a valid Q-semigroup that is not a Cu-semigroup."""
        structure = load_structure("data/structures/strict3.json")

        check = validate_structure(structure)

        assert check.passed
        assert not check.is_cu
        assert check.witnesses() == []


class TestAxiomScanners:
    """Exhaustive O5 and O6 scans."""

    def test_capped_chain_satisfies_both_axioms(self):
        """E3 satisfies O5 and O6."""
        e3 = catalog("E3")

        assert check_o5(e3).holds
        assert check_o6(e3).holds

    def test_bivariant_e2_e3_fails_o5(self):
        """[[E2,E3]] = {0,2,3,inf} is not almost algebraically ordered."""
        # Given
        hom = load_structure("data/structures/homE2E3.json")
        s = Pom(hom.name, hom.elements, hom.zero, hom.add, hom.leq)

        # When
        report = check_o5(s)

        # Then: 2 + 0 <= 3 but no x has 2 + x = 3
        assert not report.holds
        assert report.witnesses()[0] == ("2", "2", "0", "0", "3")
        assert report.axiom == "O5"

    def test_bivariant_e2_e3_satisfies_o6(self):
        """O6 survives on [[E2,E3]]."""
        hom = load_structure("data/structures/homE2E3.json")
        s = Pom(hom.name, hom.elements, hom.zero, hom.add, hom.leq)

        assert check_o6(s).holds

    @pytest.mark.slow
    @pytest.mark.parametrize("k", range(6))
    def test_o5_holds_on_small_chains(self, k):
        """No O5 witness on E0 through E5."""
        report = check_o5(catalog(f"E{k}"))

        assert report.holds
        assert report.violations == []

    def test_carrier_limit_refuses(self):
        """Carriers above the configured limit are refused with an estimate."""
        settings = LabSettings(axiom_carrier_limit=2)

        with pytest.raises(BoundExceededError, match="Refusing") as exc_info:
            check_o5(catalog("E3"), settings)

        assert exc_info.value.estimate == 5**5
        assert exc_info.value.bound == 2**5


class TestChainProperties:
    """Pom laws across families of chains."""

    @given(st.integers(min_value=1, max_value=7))
    def test_capped_chains_are_poms(self, size):
        """Every capped chain is a valid pom."""
        assert validate_pom(capped_chain(size)).is_valid

    @given(st.integers(min_value=1, max_value=7))
    def test_max_chains_are_poms(self, size):
        """Every max chain is a valid pom whose order is an aux relation."""
        chain = max_chain(size)

        assert validate_pom(chain).is_valid
        assert validate_aux(chain, chain.leq_table).is_valid
