"""
Tests for the bivariant Cu-semigroup engine.

Test Categories:
1. Finite Engine Tests - [[E2,E3]], hom monoids, evaluation
2. Closed Form Tests - Carriers realising [[S,T]] for infinite pairs
3. Composition Tests - Each composition rule and the middle-carrier check
4. Element Syntax Tests - S->T:coordinate parsing and formatting
5. Unit and Tensor Tests - iota, external tensor products, compact morphisms
6. Semiring Map Tests - pi_R, eps_R and the left action
"""

import itertools
from fractions import Fraction

import pytest

from src.algebra.bivariant import (
    bivariant,
    bivariant_by_name,
    compact_morphisms,
    compose,
    eps_r,
    evaluate,
    external_tensor,
    hom_monoid_finite,
    identity_element,
    iota,
    iota_inv,
    left_action,
    noncommutativity_witness,
    parse_element,
    pi_r,
    sigma_endpoint,
    unit_map,
)
from src.algebra.catalog import Compact, Soft, catalog
from src.algebra.errors import NoClosedFormError, PreconditionError, StructureError
from src.algebra.extended import INF, nat_mul
from src.models.bivariant_inputs import BivariantKind


@pytest.fixture
def e2_e3():
    return bivariant_by_name("E2", "E3")


@pytest.fixture
def pbar():
    return catalog("Pbar")


class TestFiniteEngine:
    """[[S,T]] for finite S and T."""

    def test_e2_e3_labels(self, e2_e3):
        """[[E2,E3]] = {0,2,3,inf}, labelled by the image of 1."""
        assert e2_e3.kind is BivariantKind.FINITE
        assert e2_e3.carrier.labels == ("0", "2", "3", "inf")
        assert e2_e3.name == "[[E2,E3]]"

    def test_every_element_is_compact(self, e2_e3):
        """Finite bivariant semigroups are algebraic."""
        assert all(x.is_compact for x in e2_e3.elements())

    def test_evaluation(self, e2_e3):
        """The element 2 sends 1 to 2 and 2 to inf."""
        # Given
        x = e2_e3.parse("2")

        # When
        one = evaluate(x, "1")
        two = evaluate(x, "2")

        # Then
        assert e2_e3.target.label(one) == "2"
        assert e2_e3.target.label(two) == "inf"

    def test_hom_monoid_summary(self):
        """Cu[E1,E2] lists three morphisms generated by 1."""
        hom = hom_monoid_finite(catalog("E1"), catalog("E2"))

        summary = hom.summary()

        assert summary.count == 3
        assert summary.generators == ["1"]
        assert summary.labels == ["0", "2", "inf"]
        assert summary.morphisms[1] == {"0": "0", "1": "2", "inf": "inf"}

    def test_summary_carries_structure(self, e2_e3):
        """Finite summaries include the full tables."""
        summary = e2_e3.summary()

        assert summary.elements == ["0", "2", "3", "inf"]
        assert summary.structure is not None
        assert summary.structure.name == "[[E2,E3]]"

    def test_addition_and_order(self, e2_e3):
        """2 + 2 = inf and 2 <= 3."""
        two, three = e2_e3.parse("2"), e2_e3.parse("3")

        assert (two + two).format() == "E2->E3:inf"
        assert two <= three
        assert not three <= two


class TestClosedForms:
    """Realising carriers for infinite pairs."""

    def test_pbar_endomorphisms_are_m1(self, pbar):
        """[[Pbar,Pbar]] is realised by M1."""
        space = bivariant(pbar, pbar)

        assert space.kind is BivariantKind.CLOSED
        assert space.carrier.name == "M1"

    def test_nbar_source(self):
        """[[Nbar,S]] is S."""
        assert bivariant_by_name("Nbar", "Sex").carrier.name == "Sex"

    def test_matrix_space(self):
        """[[Nbar^2,Nbar^3]] is Mat[3,2]."""
        assert bivariant_by_name("Nbar^2", "Nbar^3").carrier.name == "Mat[3,2]"

    def test_row_matrix_space(self):
        """[[Nbar^2,Nbar]] is Mat[1,2] and acts by the single row."""
        space = bivariant_by_name("Nbar^2", "Nbar")

        assert space.carrier.name == "Mat[1,2]"
        assert evaluate(space.parse("mat[[1,2]]"), "(3,1)") == 5

    def test_uhf_pairs(self):
        """R_p -> R_q is R_q when R_q contains R_p, Pbar otherwise."""
        assert bivariant_by_name("R{2}", "R{2,3}").carrier.name == "R{2,3}"
        assert bivariant_by_name("R{2}", "R{3}").carrier.name == "Pbar"

    def test_sex_endomorphisms_are_hex(self):
        """[[Sex,Sex]] is Hex."""
        assert bivariant_by_name("Sex", "Sex").carrier.name == "Hex"

    def test_unlisted_pair_has_no_closed_form(self):
        """Pairs outside the table are refused."""
        with pytest.raises(NoClosedFormError):
            bivariant_by_name("Z", "Sex")

    def test_q_semigroup_input_is_refused(self):
        """Bivariant semigroups take Cu-semigroups, not Q-semigroups."""
        with pytest.raises(PreconditionError):
            bivariant_by_name("Pbar<1", "Pbar")

    def test_identity_is_compact_one(self, pbar):
        """id_Pbar is the compact 1 of M1."""
        identity = identity_element(pbar)

        assert identity.coordinate == Compact(Fraction(1))
        assert identity.is_compact

    def test_sigma_forgets_softness(self):
        """1 and soft(1) in [[Pbar,Pbar]] have the same endpoint map."""
        # Given
        compact = parse_element("Pbar->Pbar:1")
        soft = parse_element("Pbar->Pbar:soft(1)")

        # When
        points = ["0", "1/2", "2", "inf"]

        # Then
        assert [evaluate(compact, p) for p in points] == [evaluate(soft, p) for p in points]
        assert soft.space.coordinate_of(sigma_endpoint(soft)) == Compact(Fraction(1))


class TestComposition:
    """y o x for x in [[S,T]], y in [[T,P]]."""

    def test_finite_composition(self):
        """2 in [[E1,E2]] followed by 2 in [[E2,E3]] is inf in [[E1,E3]]."""
        # Given
        x = bivariant_by_name("E1", "E2").parse("2")
        y = bivariant_by_name("E2", "E3").parse("2")

        # When
        result = compose(y, x)

        # Then: 1 -> 2 -> inf
        assert result.format() == "E1->E3:inf"

    def test_m1_composition_commutes(self, pbar):
        """soft(2) o soft(3) = soft(3) o soft(2) = soft(6)."""
        space = bivariant(pbar, pbar)
        a, b = space.element(Soft(Fraction(2))), space.element(Soft(Fraction(3)))

        assert compose(a, b).coordinate == Soft(Fraction(6))
        assert compose(b, a).coordinate == Soft(Fraction(6))

    def test_identity_is_neutral(self, pbar):
        """id o x = x."""
        space = bivariant(pbar, pbar)
        x = space.element(Soft(Fraction(5, 2)))

        assert compose(identity_element(pbar), x) == x

    def test_matrix_composition(self):
        """Composition in [[Nbar^2,Nbar^2]] is the matrix product."""
        space = bivariant_by_name("Nbar^2", "Nbar^2")
        y = space.parse("mat[[1,2],[0,inf]]")
        x = space.parse("mat[[3,0],[1,1]]")

        result = compose(y, x)

        assert result.format() == "Nbar^2->Nbar^2:mat[[5,2],[inf,inf]]"

    def test_nbar_source_applies_coordinate(self, pbar):
        """For x in [[Nbar,Pbar]] the result is sigma(y) applied to x."""
        x = bivariant(catalog("Nbar"), pbar).element(Fraction(2))
        y = bivariant(pbar, pbar).element(Soft(Fraction(3)))

        assert compose(y, x).coordinate == 6

    def test_middle_carriers_must_agree(self, pbar):
        """[[E2,E3]] cannot follow [[Pbar,Pbar]]."""
        x = bivariant(pbar, pbar).zero()
        y = bivariant_by_name("E2", "E3").zero()

        with pytest.raises(PreconditionError, match="middle carriers differ"):
            compose(y, x)

    def test_noncommutativity_witness(self):
        """Matrix units E12 and E21 do not commute."""
        a, b, ab, ba = noncommutativity_witness(2)

        assert ab.coordinate == ((1, 0), (0, 0))
        assert ba.coordinate == ((0, 0), (0, 1))
        assert ab != ba

    def test_noncommutativity_needs_two(self):
        """Nbar^1 is commutative."""
        with pytest.raises(PreconditionError, match="k >= 2"):
            noncommutativity_witness(1)


class TestElementSyntax:
    """S->T:coordinate."""

    def test_parse_closed_form_element(self):
        """Soft coordinates parse through the carrier."""
        x = parse_element("Pbar->Pbar:soft(2)")

        assert x.coordinate == Soft(Fraction(2))
        assert x.format() == "Pbar->Pbar:soft(2)"

    def test_parse_finite_element(self):
        """Finite coordinates are labels."""
        x = parse_element("E2->E3:3")

        assert x.format() == "E2->E3:3"

    @pytest.mark.parametrize("text", ["Pbar:2", "Pbar->:2", "->Pbar:2", "Pbar->Pbar:"])
    def test_malformed_elements(self, text):
        """Missing arrows, carriers or coordinates are structural errors."""
        with pytest.raises(StructureError, match="S->T:coordinate"):
            parse_element(text)


class TestUnitsAndTensors:
    """iota, external tensors, unit maps and compact morphisms."""

    def test_iota_round_trip(self, pbar):
        """iota_inv o iota is the identity on Pbar."""
        x = iota(pbar, "3/2")

        assert iota_inv(x) == Fraction(3, 2)

    def test_iota_inv_needs_nbar_source(self, pbar):
        """iota_inv is only defined on [[Nbar,S]]."""
        with pytest.raises(PreconditionError, match="Nbar"):
            iota_inv(identity_element(pbar))

    def test_external_tensor_with_nbar(self, pbar):
        """A factor in [[Nbar,Nbar]] acts as a multiple."""
        n = bivariant_by_name("Nbar", "Nbar").element(3)
        x = bivariant(pbar, pbar).element(Soft(Fraction(1)))

        assert external_tensor(n, x).coordinate == Soft(Fraction(3))

    def test_external_tensor_of_uhf_elements(self):
        """1/2 in [[R{2},R{2}]] times 1/3 in [[R{3},R{3}]] is 1/6 in [[R{2,3},R{2,3}]]."""
        x1 = bivariant_by_name("R{2}", "R{2}").element(Compact(Fraction(1, 2)))
        x2 = bivariant_by_name("R{3}", "R{3}").element(Compact(Fraction(1, 3)))

        result = external_tensor(x1, x2)

        assert result.space.name == "[[R{2,3},R{2,3}]]"
        assert result.coordinate == Compact(Fraction(1, 6))

    def test_external_tensor_of_matrices(self):
        """Powers of Nbar tensor by the Kronecker product."""
        x1 = bivariant_by_name("Nbar^2", "Nbar^2").parse("mat[[1,0],[0,2]]")
        x2 = bivariant_by_name("Nbar^2", "Nbar^2").parse("mat[[3,0],[0,1]]")

        result = external_tensor(x1, x2)

        assert result.space.name == "[[Nbar^4,Nbar^4]]"
        assert result.coordinate == ((3, 0, 0, 0), (0, 1, 0, 0), (0, 0, 6, 0), (0, 0, 0, 2))

    def test_external_tensor_of_one_row_matrices(self):
        """Nbar^1 tensors with Nbar^2 by the Kronecker product, landing in a row space."""
        # Given
        x1 = bivariant_by_name("Nbar^1", "Nbar^1").parse("mat[[2]]")
        x2 = bivariant_by_name("Nbar^2", "Nbar").parse("mat[[1,3]]")

        # When
        result = external_tensor(x1, x2)

        # Then
        assert result.space.name == "[[Nbar^2,Nbar^1]]"
        assert result.coordinate == ((2, 6),)

    def test_unit_map_into_nbar(self, pbar):
        """u_{S,Nbar} is iota."""
        x = unit_map(pbar, catalog("Nbar"), "2")

        assert iota_inv(x) == Fraction(2)

    def test_unit_map_unresolved(self, pbar):
        """Unresolved products have no unit map."""
        with pytest.raises(NoClosedFormError):
            unit_map(pbar, catalog("Sex"), "1")

    def test_compact_morphisms_finite(self):
        """Every element of [[E2,E3]] is compact."""
        report = compact_morphisms(catalog("E2"), catalog("E3"))

        assert report.exhaustive
        assert report.elements == ["0", "2", "3", "inf"]

    def test_compact_morphisms_r2_r3(self):
        """Only the zero map R{2} -> R{3} is a Cu-morphism."""
        report = compact_morphisms(catalog("R{2}"), catalog("R{3}"))

        assert report.exhaustive
        assert report.elements == ["0"]

    def test_compact_morphisms_sampled(self, pbar):
        """M1 is infinite with infinitely many compacts, so it is sampled."""
        report = compact_morphisms(pbar, pbar)

        assert not report.exhaustive
        assert "0" in report.elements


class TestSemiringMaps:
    """pi_R, eps_R and actions."""

    def test_pi_pbar_is_soft(self, pbar):
        """pi_Pbar(2) is soft(2) in M1."""
        x = pi_r(pbar, "2")

        assert x.coordinate == Soft(Fraction(2))
        assert eps_r(pbar, x) == Fraction(2)

    def test_pi_on_finite_semiring(self):
        """pi_E2(1) is the identity class 1."""
        e2 = catalog("E2")

        x = pi_r(e2, "1")

        assert x.space.format(x.coordinate) == "1"
        assert eps_r(e2, x) == 1

    def test_pi_needs_a_product(self):
        """Minf is not a Cu-semiring."""
        with pytest.raises(PreconditionError, match="not a Cu-semiring"):
            pi_r(catalog("Minf"), "1")

    def test_eps_needs_matching_space(self, pbar):
        """eps_Pbar rejects elements of other spaces."""
        with pytest.raises(PreconditionError, match="needs an element"):
            eps_r(pbar, bivariant_by_name("E2", "E3").zero())

    def test_nbar_left_action(self, pbar):
        """2 . soft(1) = soft(2)."""
        x = bivariant(pbar, pbar).element(Soft(Fraction(1)))

        result = left_action(catalog("Nbar"), 2, x)

        assert result.coordinate == Soft(Fraction(2))

    def test_soft_unit_action_refused(self, pbar):
        """Pbar has a soft unit, so its action is not unital."""
        x = bivariant(pbar, pbar).element(Soft(Fraction(1)))

        with pytest.raises(PreconditionError, match="not unital"):
            left_action(pbar, "2", x)

    def test_inf_entries_in_matrix_space(self):
        """Matrix coordinates accept inf entries."""
        x = bivariant_by_name("Nbar^2", "Nbar^2").parse("mat[[inf,0],[0,1]]")

        assert x.coordinate[0][0] == INF


NBAR_POWERS = ["Nbar", "Nbar^2", "Nbar^3"]


def _vector(value):
    return value if isinstance(value, tuple) else (value,)


def _kron_vector(v, w):
    return tuple(nat_mul(a, b) for a in _vector(v) for b in _vector(w))


def _picked(source, target, seed):
    """Two elements past the fixed zero and unit of the sampler."""
    return bivariant_by_name(source, target).sample(5, seed)[-2:]


def _tensor_point(source, v, w):
    """v (x) w as an element of the tensor of the two sources."""
    product = _kron_vector(v, w)
    return product[0] if source.name == "Nbar" else product


@pytest.mark.slow
class TestAcceptanceSweeps:
    """Exhaustive and seeded sweeps over finite spaces and matrix spaces."""

    @pytest.mark.parametrize("k", range(6))
    @pytest.mark.parametrize("l", range(6))
    def test_chain_hom_spaces(self, k, l):
        """[[E_k,E_l]] is {0, ceil((l+1)/(k+1)), ..., l, inf} with capped addition."""
        # Given
        lowest = -(-(l + 1) // (k + 1))
        expected = ["0", *(str(j) for j in range(lowest, l + 1)), "inf"]

        def value(label):
            return INF if label == "inf" else int(label)

        def capped(a, b):
            total = value(a) + value(b)
            return "inf" if total > l else str(total)

        # When
        carrier = bivariant_by_name(f"E{k}", f"E{l}").carrier

        # Then
        assert sorted(carrier.labels, key=value) == expected
        for a in expected:
            for b in expected:
                assert carrier.label(carrier.add(carrier.index(a), carrier.index(b))) == capped(a, b)
                assert carrier.leq(carrier.index(a), carrier.index(b)) == (value(a) <= value(b))

    @pytest.mark.parametrize("seed", range(2))
    def test_kronecker_sweep(self, seed):
        """(A (x) B)(v (x) w) = Av (x) Bw across powers of Nbar."""
        spaces = [(s, t) for s in NBAR_POWERS for t in NBAR_POWERS]
        for (s1, t1), (s2, t2) in itertools.product(spaces, spaces):
            for x1, x2 in itertools.product(_picked(s1, t1, seed), _picked(s2, t2, seed + 1)):
                result = external_tensor(x1, x2)

                for v, w in itertools.product(catalog(s1).sample(3, seed), catalog(s2).sample(3, seed + 2)):
                    point = _tensor_point(result.space.source, v, w)
                    expected = _kron_vector(evaluate(x1, v), evaluate(x2, w))
                    assert _vector(evaluate(result, point)) == expected

    @pytest.mark.parametrize("seed", range(2))
    def test_composition_sweep(self, seed):
        """y o x evaluates as y after x for every chain of powers of Nbar."""
        for s, t, p in itertools.product(NBAR_POWERS, repeat=3):
            for x, y in itertools.product(_picked(s, t, seed), _picked(t, p, seed + 1)):
                product = compose(y, x)

                assert product.space.name == f"[[{s},{p}]]"
                for v in catalog(s).sample(3, seed):
                    assert evaluate(product, v) == evaluate(y, evaluate(x, v))
