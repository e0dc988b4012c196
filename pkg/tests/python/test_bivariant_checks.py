"""
Tests for the executable certificates on bivariant Cu-semigroups.

Test Categories:
1. Semiring Map Tests - pi_R and eps_R on finite and sampled semirings
2. Solidness Tests - Statuses (1)-(5) with spot checks
3. Adjunction Tests - Cu(S, [[T,P]]) against bimorphisms and the tensor leg
4. Ideal Tests - [[S,J]], [[S/J,T]] and the ideal lattice map
5. Bimodule Tests - Composition laws on [[S,T]]
6. Non-simplicity Tests - The ideal below soft(inf) in [[Sex,Sex]]
"""

import pytest

from src.algebra.bivariant_checks import (
    adjunction_check,
    bimodule_check,
    hex_nonsimple_witness,
    ideal_embed_check,
    ideal_lattice_map,
    quotient_embed_check,
    semiring_map_check,
    solid_status,
)
from src.algebra.catalog import catalog, finite_carrier
from src.algebra.errors import PreconditionError
from src.algebra.finite_q import direct_sum, enumerate_ideals, ideal_from_labels, trivial


@pytest.fixture
def e0_e0():
    e0 = finite_carrier(catalog("E0"))
    return direct_sum(e0, e0)


class TestSemiringMaps:
    """eps o pi = id, multiplicativity, order-embedding."""

    def test_finite_semiring(self):
        """E2 passes every check exhaustively."""
        report = semiring_map_check(catalog("E2"))

        assert report.passed
        assert report.unital
        assert report.samples == 4
        assert report.failure is None

    def test_pbar_is_not_unital(self):
        """pi_Pbar(1) is soft(1), not the compact identity."""
        # Given
        pbar = catalog("Pbar")

        # When
        report = semiring_map_check(pbar, samples=8)

        # Then
        assert report.eps_pi_identity
        assert report.multiplicative
        assert not report.unital

    def test_semiring_needs_product(self):
        """Minf has no product."""
        with pytest.raises(PreconditionError, match="not a Cu-semiring"):
            semiring_map_check(catalog("Minf"))


class TestSolidStatus:
    """Statuses (1)-(5) and their spot checks."""

    @pytest.mark.parametrize("name", ["Nbar", "E2", "Pbar", "Z"])
    def test_spot_checks_pass(self, name):
        """Recorded statuses agree with the computations."""
        report = solid_status(name)

        assert report.passed
        assert report.implications_consistent

    def test_pbar_statuses(self):
        """Pbar is solid but pi_Pbar is not surjective."""
        report = solid_status("Pbar")

        assert report.statuses[1] is True
        assert report.statuses[4] is False
        assert any(check.name == "pi image is soft" and check.passed for check in report.spot_checks)

    def test_unknown_row(self):
        """Carriers outside the fact table are refused."""
        with pytest.raises(PreconditionError, match="No fact row"):
            solid_status("Foo")


class TestAdjunction:
    """Cu(S, [[T,P]]) = CuBimor(S x T, P)."""

    def test_e1_adjunction_with_tensor_leg(self):
        """E1 (x) E1 = E1 resolves, so all three sides are compared."""
        report = adjunction_check(catalog("E1"), catalog("E1"), catalog("E1"))

        assert report.passed
        assert report.hom_side_count == report.bimorphism_count == 3
        assert report.tensor_leg_checked
        assert report.tensor_side_count == 3

    def test_unresolved_tensor_skips_leg(self):
        """E0 (x) E1 has no closed form; the hom side still matches."""
        report = adjunction_check(catalog("E0"), catalog("E1"), catalog("E2"))

        assert report.bijective
        assert report.order_isomorphism
        assert not report.tensor_leg_checked
        assert report.tensor_leg_holds is None

    def test_infinite_carrier_refused(self):
        """The certificate is exhaustive, so carriers must be finite."""
        with pytest.raises(PreconditionError):
            adjunction_check(catalog("Pbar"), catalog("E1"), catalog("E1"))


class TestIdeals:
    """Ideals of the target and quotients of the source."""

    def test_ideal_embedding(self, e0_e0):
        """[[E1,J]] is the part of [[E1,E0+E0]] landing in J."""
        # Given
        ideal = ideal_from_labels(e0_e0, ["(inf,0)"])

        # When
        report = ideal_embed_check(catalog("E1"), e0_e0, ideal)

        # Then
        assert report.passed
        assert report.kind == "ideal"
        assert (report.sub_count, report.ambient_count) == (2, 4)
        assert report.proper

    def test_quotient_embedding(self, e0_e0):
        """[[(E0+E0)/J,E1]] is the part of [[E0+E0,E1]] vanishing on J."""
        ideal = ideal_from_labels(e0_e0, ["(inf,0)"])

        report = quotient_embed_check(e0_e0, catalog("E1"), ideal)

        assert report.passed
        assert report.kind == "quotient"
        assert (report.sub_count, report.ambient_count) == (2, 4)

    def test_ideal_lattice_is_not_injective(self):
        """Both (E1, {0}) and (E1, E1) map to the zero ideal of [[E1,E1]]."""
        report = ideal_lattice_map(catalog("E1"), catalog("E1"))

        assert len(report.entries) == 4
        assert report.lattice_size == 2
        assert report.surjective
        assert not report.injective


class TestBimodule:
    """[[S,S]] and [[T,T]] act on [[S,T]] by composition."""

    def test_finite_bimodule(self):
        """Composition laws hold exhaustively on [[E1,E2]]."""
        report = bimodule_check(catalog("E1"), catalog("E2"))

        assert report.passed
        assert report.samples == 3

    def test_m1_bimodule(self):
        """Composition laws hold on sampled elements of M1."""
        pbar = catalog("Pbar")

        report = bimodule_check(pbar, pbar)

        assert report.passed
        assert report.failure is None


class TestNonSimplicity:
    """[[Sex,Sex]] = Hex is not simple."""

    def test_hex_witness(self):
        """The ideal below soft(inf) misses cpt(inf)."""
        report = hex_nonsimple_witness()

        assert report.passed
        assert report.carrier == "Hex"
        assert report.bound == "soft(inf)"
        assert report.excluded == "cpt(inf)"
        assert report.space == "[[Sex,Sex]]"


def _small_cu_semigroups() -> dict:
    e0, e1, e2 = (finite_carrier(catalog(f"E{k}")) for k in range(3))
    return {"E0": e0, "E1": e1, "E2": e2, "E0+E0": direct_sum(e0, e0), "{0}": trivial()}


SMALL = ["E0", "E1", "E2", "E0+E0", "{0}"]


@pytest.mark.slow
class TestAcceptanceSweeps:
    """Every triple and pair drawn from the small Cu-semigroups."""

    @pytest.mark.parametrize("p", SMALL)
    @pytest.mark.parametrize("t", SMALL)
    @pytest.mark.parametrize("s", SMALL)
    def test_adjunction_on_every_triple(self, s, t, p):
        """Cu(S, [[T,P]]) and the bimorphisms correspond order-isomorphically."""
        carriers = _small_cu_semigroups()

        report = adjunction_check(carriers[s], carriers[t], carriers[p])

        assert report.bijective
        assert report.order_isomorphism
        assert report.passed

    @pytest.mark.parametrize("t", SMALL)
    @pytest.mark.parametrize("s", SMALL)
    def test_ideals_and_quotients_on_every_pair(self, s, t):
        """Each ideal of T embeds [[S,J]] and each ideal of S embeds [[S/J,T]]."""
        carriers = _small_cu_semigroups()
        source, target = carriers[s], carriers[t]

        for ideal in enumerate_ideals(target):
            assert ideal_embed_check(source, target, ideal).passed
        for ideal in enumerate_ideals(source):
            assert quotient_embed_check(source, target, ideal).passed
