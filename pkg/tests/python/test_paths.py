"""
Tests for paths, path classes and the dyadic chain.

Test Categories:
1. Construction Tests - Const/Scaled/Stitched validation and index checks
2. Comparison Tests - Exact LE/NLE and way-below on classifiable carriers
3. Construction Operations - cut-down, interpolation, sums and suprema
4. Dyadic Chain Tests - Back-and-forth isomorphism and oracle failures
5. Functoriality and Oracle Tests - Mapping paths, step-path tau
6. Syntax Tests - parse_path / format_path
"""

import bisect
import itertools
import math
import warnings
from fractions import Fraction

import numpy as np
import pytest

from src.algebra.catalog import catalog, finite_carrier
from src.algebra.errors import BoundExceededError, PathConstructionError, PreconditionError, StructureError
from src.algebra.extended import INF
from src.algebra.finite_q import find_isomorphism, random_q_semigroup, strict_chain, tau_finite
from src.algebra.paths import (
    Const,
    Scaled,
    Stitched,
    cantor_iso,
    classify,
    compare_report,
    cut_down,
    dyadic_chain,
    dyadic_level,
    format_path,
    interpolate,
    parse_path,
    path_add,
    path_compare,
    path_eval,
    path_sup,
    path_sup_limit,
    path_waybelow,
    question_mark,
    question_mark_inverse,
    step_path,
    step_path_tau,
    tau_of_morphism,
)
from src.models.path_inputs import Comparison, Decision
from src.models.settings_inputs import LabSettings

HALF = Fraction(1, 2)


@pytest.fixture
def pbar():
    return catalog("Pbar")


@pytest.fixture
def pbar_finite():
    """(Pbar, <_1): finite values are self-related, so constants are paths."""
    return catalog("Pbar<1")


def _larger(b1, b2, b):
    return max(b1, b2)


def _gap_search_pairs(k: int) -> list:
    """Back-and-forth by scanning each gap for its lowest denominator or level."""
    dyadics, rationals, pairs = [], [], []
    levels = ((n, i) for n in range(1, 64) for i in range(1, 2**n, 2))
    fractions = (Fraction(p, q) for q in range(2, 10_000) for p in range(1, q) if math.gcd(p, q) == 1)

    def gap(sorted_side, other_side, value):
        position = bisect.bisect(sorted_side, value)
        lo = other_side[position - 1] if position else Fraction(0)
        hi = other_side[position] if position < len(other_side) else Fraction(1)
        return lo, hi

    while len(pairs) < k:
        if len(pairs) % 2 == 0:
            n, i = next(index for index in levels if Fraction(index[1], 2 ** index[0]) not in dyadics)
            d = Fraction(i, 2**n)
            lo, hi = gap(dyadics, rationals, d)
            q = next(q for q in range(2, 10_000) if Fraction(math.floor(lo * q) + 1, q) < hi)
            r = Fraction(math.floor(lo * q) + 1, q)
        else:
            r = next(x for x in fractions if x not in rationals)
            lo, hi = gap(rationals, dyadics, r)
            n = next(m for m in range(1, 64) if Fraction(math.floor(lo * 2**m) + 1, 2**m) < hi)
            i = math.floor(lo * 2**n) + 1
            d = Fraction(i, 2**n)
        position = bisect.bisect(dyadics, d)
        dyadics.insert(position, d)
        rationals.insert(position, r)
        pairs.append(((n, i), r))
    return pairs


class TestConstruction:
    """Building path expressions."""

    def test_const_needs_self_related_value(self, pbar):
        """In Pbar only 0 is way-below itself."""
        with pytest.raises(PathConstructionError, match="not self-related"):
            Const(pbar, Fraction(1))

    def test_const_zero(self, pbar):
        """The zero path exists on every carrier."""
        assert path_eval(Const(pbar, Fraction(0)), HALF) == 0

    def test_scaled_requires_scaling(self):
        """E2 has no scaling by indices."""
        with pytest.raises(PathConstructionError, match="does not support scaled"):
            Scaled(catalog("E2"), 1)

    def test_scaled_values(self, pbar):
        """scaled(a) at l is l*a."""
        p = Scaled(pbar, Fraction(3))

        assert path_eval(p, Fraction(1, 3)) == 1

    def test_stitch_last_cut_must_be_one(self, pbar_finite):
        """The pieces must cover the whole index interval."""
        with pytest.raises(PathConstructionError, match="last stitch cut must be 1"):
            Stitched(((HALF, Const(pbar_finite, Fraction(1))),))

    def test_stitch_boundary_violation(self, pbar_finite):
        """A later piece may not start below an earlier value."""
        with pytest.raises(PathConstructionError, match="stitch at 1/2") as exc_info:
            Stitched(((HALF, Const(pbar_finite, Fraction(2))), (Fraction(1), Const(pbar_finite, Fraction(1)))))

        assert exc_info.value.witness == ("2", "1")

    def test_stitch_values(self, pbar_finite):
        """Each piece covers its own index window."""
        p = step_path(pbar_finite, [Fraction(1), Fraction(2)])

        assert path_eval(p, Fraction(1, 4)) == 1
        assert path_eval(p, Fraction(3, 4)) == 2

    @pytest.mark.parametrize("index", [0, 1, Fraction(3, 2)])
    def test_index_outside_interval(self, pbar, index):
        """Indices must lie strictly between 0 and 1."""
        with pytest.raises(PreconditionError, match="outside"):
            path_eval(Scaled(pbar, Fraction(1)), index)

    def test_float_index_rejected(self, pbar):
        """Path indices are exact rationals."""
        with pytest.raises(PreconditionError, match="exact rationals"):
            path_eval(Scaled(pbar, Fraction(1)), 0.5)


class TestComparison:
    """Exact comparison on classifiable carriers."""

    def test_soft_below_compact(self, pbar_finite):
        """scaled(1) reaches 1 without attaining it, so it lies below const(1)."""
        soft, compact = Scaled(pbar_finite, Fraction(1)), Const(pbar_finite, Fraction(1))

        assert path_compare(soft, compact) is Comparison.LE
        assert path_compare(compact, soft) is Comparison.NLE

    def test_endpoint_order(self, pbar):
        """Different endpoints compare by value."""
        p, q = Scaled(pbar, Fraction(1)), Scaled(pbar, Fraction(2))

        assert path_compare(p, q) is Comparison.LE
        assert path_compare(q, p) is Comparison.NLE

    def test_classify_scaled(self, pbar):
        """scaled(a) has endpoint a, not attained."""
        c = classify(Scaled(pbar, Fraction(2)))

        assert c.classified
        assert c.value == 2
        assert c.attained is False

    def test_waybelow_decisions(self, pbar_finite):
        """const(1) is compact; scaled(1) is way-below const(1) but not conversely."""
        soft, compact = Scaled(pbar_finite, Fraction(1)), Const(pbar_finite, Fraction(1))

        assert path_waybelow(compact, compact) is Decision.TRUE
        assert path_waybelow(soft, compact) is Decision.TRUE
        assert path_waybelow(compact, soft) is Decision.FALSE
        assert path_waybelow(soft, soft) is Decision.FALSE

    def test_carrier_mismatch(self, pbar, pbar_finite):
        """Paths on different carriers are not comparable."""
        with pytest.raises(PreconditionError, match="carrier mismatch"):
            path_compare(Scaled(pbar, Fraction(1)), Scaled(pbar_finite, Fraction(1)))

    def test_finite_comparison(self):
        """On a finite carrier classes are eventual values."""
        e2 = finite_carrier(catalog("E2"))
        p = step_path(e2, [1, 2])
        q = Const(e2, 3)

        assert path_compare(p, q) is Comparison.LE
        assert path_compare(q, p) is Comparison.NLE

    def test_compare_report(self, pbar_finite):
        """The report carries both directions."""
        report = compare_report(Scaled(pbar_finite, Fraction(1)), Const(pbar_finite, Fraction(1)))

        assert report.left_le_right is Comparison.LE
        assert report.right_le_left is Comparison.NLE
        assert report.left.attained is False
        assert report.right.value == "1"


class TestConstructions:
    """cut-down, interpolation, sums and suprema."""

    def test_cut_down_is_waybelow(self, pbar):
        """[p_e] << [p]."""
        p = Scaled(pbar, Fraction(1))

        small = cut_down(p, HALF)

        assert path_waybelow(small, p) is Decision.TRUE
        assert path_eval(small, Fraction(1, 4)) == 0
        assert path_eval(small, Fraction(3, 4)) == Fraction(1, 4)

    def test_cut_down_of_zero(self, pbar):
        """The zero path is its own cut-down."""
        zero = Const(pbar, Fraction(0))

        assert cut_down(zero, HALF) is zero

    def test_interpolate(self, pbar):
        """Interpolated values lie between p(lo) and p(hi)."""
        p = Scaled(pbar, Fraction(4))

        h = interpolate(p, Fraction(1, 4), Fraction(3, 4))

        assert path_eval(h, HALF) == 2

    def test_interpolate_bounds(self, pbar):
        """lo must be below hi."""
        with pytest.raises(PreconditionError, match="interpolation"):
            interpolate(Scaled(pbar, Fraction(1)), HALF, Fraction(1, 4))

    def test_path_add(self, pbar):
        """Sums are pointwise and endpoints add."""
        total = path_add(Scaled(pbar, Fraction(1)), Scaled(pbar, Fraction(2)))

        assert path_eval(total, HALF) == Fraction(3, 2)
        assert classify(total).value == 3

    def test_path_sup_of_two(self, pbar):
        """sup(scaled(1), scaled(2)) is equivalent to scaled(2)."""
        f, g = Scaled(pbar, Fraction(1)), Scaled(pbar, Fraction(2))

        h = path_sup([f, g])

        assert path_compare(h, g) is Comparison.LE
        assert path_compare(g, h) is Comparison.LE
        assert path_compare(f, h) is Comparison.LE

    def test_path_sup_needs_increasing(self, pbar):
        """Decreasing inputs are refused."""
        with pytest.raises(PreconditionError, match="increasing"):
            path_sup([Scaled(pbar, Fraction(2)), Scaled(pbar, Fraction(1))])

    def test_path_sup_limit(self, pbar):
        """sup of scaled(1 - 2^-n) is scaled(1)."""
        h = path_sup_limit(lambda n: Scaled(pbar, 1 - Fraction(1, 2**n)), Fraction(1))

        c = classify(h)
        assert c.value == 1
        assert c.attained is False
        assert path_compare(h, Scaled(pbar, Fraction(1))) is Comparison.LE
        assert path_eval(h, Fraction(1, 4)) == Fraction(1, 8)


class TestDyadicChain:
    """Back-and-forth isomorphism and chains built from oracles."""

    def test_cantor_first_pairs(self):
        """The first three pairs of the isomorphism."""
        assert cantor_iso(3) == [((1, 1), HALF), ((2, 1), Fraction(1, 3)), ((2, 3), Fraction(2, 3))]

    def test_cantor_is_order_preserving(self):
        """Dyadic and rational sides are sorted in lockstep."""
        pairs = cantor_iso(40)
        dyadics = [Fraction(i, 2**n) for (n, i), _ in pairs]
        rationals = [r for _, r in pairs]

        order = sorted(range(len(pairs)), key=lambda k: dyadics[k])
        assert [rationals[k] for k in order] == sorted(rationals)

    def test_cantor_negative(self):
        """k must be nonnegative."""
        with pytest.raises(PreconditionError):
            cantor_iso(-1)

    def test_chain_values(self, pbar):
        """Midpoint refinement below 1 with cofinal 1 - 2^-n."""
        chain = dyadic_chain(pbar, Fraction(1), lambda n: 1 - Fraction(1, 2**n))

        assert path_eval(chain, HALF) == Fraction(3, 4)
        assert path_eval(chain, Fraction(1, 3)) == Fraction(3, 8)
        assert path_eval(chain, Fraction(2, 3)) == Fraction(7, 8)
        assert classify(chain).value == 1

    def test_chain_zero(self, pbar):
        """The chain to zero is the constant zero path."""
        chain = dyadic_chain(pbar, Fraction(0), lambda n: Fraction(0))

        assert isinstance(chain, Const)

    def test_chain_bad_oracle(self, pbar):
        """An interpolation oracle returning the target itself is rejected."""
        with pytest.raises(PathConstructionError, match="breaks the auxiliary relation"):
            dyadic_chain(pbar, Fraction(1), lambda n: 1 - Fraction(1, 2**n), interp=lambda b1, b2, b: b)

    def test_question_mark_values(self):
        """Rationals pair with dyadics through their continued fractions."""
        assert question_mark(Fraction(1, 3)) == Fraction(1, 4)
        assert question_mark(Fraction(2, 5)) == Fraction(3, 8)
        assert question_mark(Fraction(1, 997)) == Fraction(1, 2**996)
        assert question_mark_inverse((3, 3)) == Fraction(2, 5)
        assert dyadic_level(Fraction(40, 41)) == 40

    def test_cantor_matches_gap_search(self):
        """The continued-fraction steps agree with a literal gap search."""
        assert cantor_iso(300) == _gap_search_pairs(300)

    def test_deep_index_is_evaluated_iteratively(self, pbar):
        """An index two thousand levels deep is evaluated without recursion."""
        # Given
        chain = dyadic_chain(pbar, Fraction(1), lambda n: 1 - Fraction(1, 2**n))

        # When
        value = path_eval(chain, Fraction(1, 2000))

        # Then
        assert value == Fraction(3, 2**2000)

    def test_deep_index_is_refused_past_bound(self, pbar):
        """Indices deeper than enumeration_bound are refused, not computed."""
        chain = dyadic_chain(
            pbar, Fraction(1), lambda n: 1 - Fraction(1, 2**n), settings=LabSettings(enumeration_bound=100)
        )

        with pytest.raises(BoundExceededError, match="level 199"):
            path_eval(chain, Fraction(1, 200))
        assert path_eval(chain, HALF) == Fraction(3, 4)

    def test_chain_never_attains_non_compact_target(self, pbar):
        """In Pbar 1 is not way-below itself, so the endpoint is not attained."""
        chain = dyadic_chain(pbar, Fraction(1), lambda n: 1 - Fraction(1, 2**n))

        assert chain.hint == (Fraction(1), False)

    def test_early_attainment_is_reported(self, pbar_finite):
        """A spine that reaches the target within the first levels is attained."""
        chain = dyadic_chain(pbar_finite, Fraction(1), lambda n: min(Fraction(n, 4), Fraction(1)), interp=_larger)

        assert classify(chain).attained is True

    def test_late_attainment_leaves_chain_unclassified(self, pbar_finite):
        """A spine reaching the target at level 40 is not misreported as unattained."""
        # Given
        chain = dyadic_chain(pbar_finite, Fraction(1), lambda n: min(Fraction(n, 40), Fraction(1)), interp=_larger)

        # When
        summary = classify(chain)

        # Then
        assert not summary.classified
        assert path_eval(chain, Fraction(39, 40)) == Fraction(39, 40)
        assert path_eval(chain, Fraction(40, 41)) == 1


class TestFunctoriality:
    """Mapping paths along morphisms and the step-path oracle."""

    def test_finite_morphism(self):
        """The morphism E1 -> E2 sending 1 to 2 maps const(1) to const(2)."""
        e1, e2 = finite_carrier(catalog("E1")), finite_carrier(catalog("E2"))
        table = (0, 2, 3)

        mapped = tau_of_morphism(lambda a: table[a], Const(e1, 1), e2)

        assert path_eval(mapped, HALF) == 2

    def test_sampled_morphism_warns(self, pbar):
        """Infinite sources are checked on samples only."""
        double = lambda a: pbar.scale(Fraction(2), a)  # noqa: E731

        with pytest.warns(UserWarning, match="samples only"):
            mapped = tau_of_morphism(double, Scaled(pbar, Fraction(1)), pbar)

        assert path_eval(mapped, HALF) == 1

    def test_non_morphism_rejected(self, pbar):
        """A map moving zero is not a Q-morphism."""
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            with pytest.raises(PreconditionError, match="sends 0"):
                tau_of_morphism(lambda a: a + 1, Scaled(pbar, Fraction(1)), pbar)

    def test_step_path_tau_of_strict_chain(self):
        """Only constant zero steps survive in the strict chain."""
        steps = step_path_tau(strict_chain(3))

        assert steps.cu.size == 1
        assert find_isomorphism(steps.cu, tau_finite(strict_chain(3)).cu, compare_aux=True) == [0]

    def test_step_path_tau_matches_tau(self):
        """Step paths recover tau(E2) = E2."""
        e2 = finite_carrier(catalog("E2"))

        steps = step_path_tau(e2)

        assert find_isomorphism(steps.cu, tau_finite(e2).cu, compare_aux=True) is not None


class TestSyntax:
    """Textual path syntax."""

    def test_parse_stitch(self, pbar_finite):
        """stitch[(c,p),...] round-trips through format_path."""
        text = "stitch[(1/2,const(1)),(1,const(2))]"

        p = parse_path(text, pbar_finite)

        assert format_path(p) == text

    def test_parse_nested(self, pbar):
        """cut and interp nest."""
        p = parse_path("cut(interp(scaled(2),1/4,3/4),1/2)", pbar)

        assert format_path(p) == "cut(interp(scaled(2),1/4,3/4),1/2)"

    def test_parse_inf(self, pbar):
        """scaled(inf) is constant inf, which is not increasing on Pbar."""
        with pytest.raises(PathConstructionError, match="not increasing"):
            parse_path("scaled(inf)", pbar)

    def test_parse_inf_on_order_relation(self):
        """On (Pbar, <_inf) inf is self-related, so const(inf) is a path."""
        p = parse_path("const(inf)", catalog("Pbar<inf"))

        assert path_eval(p, HALF) == INF

    def test_parse_error(self, pbar):
        """Unknown heads are syntax errors."""
        with pytest.raises(StructureError, match="cannot parse path"):
            parse_path("ramp(1)", pbar)

    def test_wrong_argument_count(self, pbar):
        """cut takes two arguments."""
        with pytest.raises(StructureError, match="takes 2 arguments"):
            parse_path("cut(scaled(1))", pbar)


def _classifiable_corpus(carrier) -> list:
    values = sorted({Fraction(n, d) for n in range(1, 17) for d in range(1, 5)})
    paths = []
    for a in values:
        scaled = Scaled(carrier, a)
        paths += [scaled, cut_down(scaled, Fraction(1, 4)), cut_down(scaled, HALF), interpolate(scaled, Fraction(1, 4), Fraction(3, 4))]
        if carrier.aux(a, a):
            paths.append(Const(carrier, a))
    paths += [path_add(Scaled(carrier, a), Scaled(carrier, b)) for a, b in zip(values, values[1:])]
    return paths


def _finite_corpus(carrier) -> list:
    elements = carrier.elements()
    paths = []
    for a in elements:
        constant = Const(carrier, a)
        paths += [constant, cut_down(constant, Fraction(1, 4)), cut_down(constant, HALF)]
    paths += [step_path(carrier, [a, b]) for a in elements for b in elements if a != b and carrier.leq(a, b)]
    return paths


def _path_corpus() -> dict:
    corpus = {name: _classifiable_corpus(catalog(name)) for name in ("Pbar", "Pbar<1")}
    for k in range(6):
        corpus[f"E{k}"] = _finite_corpus(finite_carrier(catalog(f"E{k}")))
    return corpus


def _le_matrix(paths) -> np.ndarray:
    verdicts = [[path_compare(p, q) for q in paths] for p in paths]
    assert all(v is not Comparison.UNKNOWN for row in verdicts for v in row)
    return np.array([[v is Comparison.LE for v in row] for row in verdicts])


@pytest.mark.slow
class TestAcceptanceSweeps:
    """The step-path oracle and laws over a generated path corpus."""

    @pytest.mark.parametrize("seed", range(200))
    def test_step_path_oracle_matches_tau(self, seed):
        """Step paths with up to three breakpoints give tau, way-below table included."""
        s = random_q_semigroup(np.random.default_rng(seed), 5)

        steps = step_path_tau(s)

        assert find_isomorphism(steps.cu, tau_finite(s).cu, compare_aux=True) is not None

    def test_corpus_size(self):
        """The corpus holds at least five hundred paths."""
        assert sum(len(paths) for paths in _path_corpus().values()) >= 500

    @pytest.mark.parametrize("name", ["Pbar", "Pbar<1", "E0", "E1", "E2", "E3", "E4", "E5"])
    def test_comparison_is_a_preorder(self, name):
        """Comparison is decided, reflexive and transitive on every carrier of the corpus."""
        le = _le_matrix(_path_corpus()[name])

        assert le.diagonal().all()
        through = (le.astype(np.int64) @ le.astype(np.int64)) > 0
        assert not (through & ~le).any()

    @pytest.mark.parametrize("name", ["Pbar", "Pbar<1", "E3", "E5"])
    def test_cut_downs_are_waybelow(self, name):
        """p_e << p_e' whenever e' < e."""
        epsilons = [Fraction(k, 8) for k in range(1, 8)]
        for p in _path_corpus()[name]:
            for e_small, e_large in itertools.combinations(epsilons, 2):
                assert path_waybelow(cut_down(p, e_large), cut_down(p, e_small)) is Decision.TRUE
            assert path_waybelow(cut_down(p, HALF), p) is Decision.TRUE

    @pytest.mark.parametrize("name", ["E2", "E3", "E4"])
    def test_path_sup_is_least_upper_bound(self, name):
        """sup(f, g) bounds f and g and lies below every common upper bound."""
        paths = _path_corpus()[name]
        le = _le_matrix(paths)

        for i, j in zip(*np.nonzero(le)):
            h = path_sup([paths[i], paths[j]])

            assert path_compare(paths[i], h) is Comparison.LE
            assert path_compare(paths[j], h) is Comparison.LE
            for u in np.nonzero(le[i] & le[j])[0]:
                assert path_compare(h, paths[u]) is Comparison.LE

    @pytest.mark.parametrize("name", ["Pbar", "Pbar<1"])
    @pytest.mark.parametrize("a", [Fraction(1), Fraction(5, 2), Fraction(7)])
    def test_chain_is_increasing_and_cofinal(self, name, a):
        """Chain values at 64 indices increase, stay below a and pass every cofinal term."""
        carrier = catalog(name)

        def cofinal(n):
            return a * (1 - Fraction(1, 2**n))

        chain = dyadic_chain(carrier, a, cofinal)
        values = [path_eval(chain, Fraction(k, 64)) for k in range(1, 64)]

        assert all(carrier.aux(low, high) for low, high in zip(values, values[1:]))
        assert all(carrier.aux(v, a) for v in values)
        assert all(carrier.aux(cofinal(n), values[-1]) for n in range(1, 64))
