"""
Bivariant Verifier Calculator for cuntzlab

Executable certificates for the structural facts about [[S,T]]: the
internal-hom adjunction, the semiring maps pi_R and eps_R, solidness,
ideals and quotients, the bimodule structure and the non-simplicity of
[[Sex,Sex]].

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (bivariant_inputs.py,
             catalog_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
Finite checks are exhaustive and report the first failing witness.
Checks on infinite carriers run on the deterministic sample of the
configured seed; a passing sampled check is evidence, not proof, and the
reports say how many samples were used.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import itertools
from fractions import Fraction
from typing import Any

from src.algebra.bivariant import (
    BivariantElement,
    BivariantSemigroup,
    FiniteTable,
    ScalarMul,
    bivariant,
    compose,
    eps_r,
    identity_element,
    pi_r,
    sample_elements,
)
from src.algebra.catalog import Compact, Soft, TruncatedInterval, catalog, finite_carrier
from src.algebra.core_order import Carrier
from src.algebra.errors import NoClosedFormError, PreconditionError, UnsupportedOperationError
from src.algebra.extended import INF
from src.algebra.finite_q import (
    FiniteQSemigroup,
    Ideal,
    MorphismEnumerator,
    enumerate_ideals,
    is_ideal,
    pointwise_leq,
    quotient,
)
from src.algebra.semiring_facts import fact_table, facts, implication_violations
from src.algebra.tensor import enumerate_bimorphisms, omega_table, precompose, table_leq
from src.models.bivariant_inputs import (
    AdjunctionReport,
    BimoduleReport,
    IdealEmbedReport,
    IdealLatticeEntry,
    IdealLatticeReport,
    NonSimplicityReport,
    SemiringMapReport,
)
from src.models.catalog_inputs import SolidStatusReport, SpotCheck
from src.models.settings_inputs import LabSettings

SEMIRING_SAMPLES = 25
BIMODULE_SAMPLES = 4


def _finite_cu(carrier: Carrier) -> FiniteQSemigroup:
    finite = finite_carrier(carrier)
    if not finite.is_cu:
        raise PreconditionError(f"{carrier.name} is a Q-semigroup, not a Cu-semigroup")
    return finite


# ---------------------------------------------------------------------------
# Semiring maps and solidness
# ---------------------------------------------------------------------------


def _semiring_samples(r: Carrier, count: int, seed: int) -> list[Any]:
    if r.is_finite:
        return r.elements()[:count]
    return r.sample(count, seed)


def semiring_map_check(
    r: Carrier, samples: int = SEMIRING_SAMPLES, settings: LabSettings | None = None
) -> SemiringMapReport:
    """
    Check eps o pi = id, multiplicativity and order-embedding of pi_R on samples.

    Raises:
        PreconditionError: If R has no product
        NoClosedFormError: If [[R,R]] is not supported
    """
    settings = settings or LabSettings()
    elements = _semiring_samples(r, samples, settings.sample_seed)
    images = {r.format(a): pi_r(r, a, settings) for a in elements}
    failure: list[str] | None = None

    def pi(a: Any) -> BivariantElement:
        return images[r.format(a)]

    eps_pi_identity = True
    for a in elements:
        if not r.eq(eps_r(r, pi(a)), a):
            eps_pi_identity = False
            failure = failure or ["eps o pi", r.format(a)]

    multiplicative = True
    order_embedding = True
    for a, b in itertools.product(elements, repeat=2):
        product = pi_r(r, r.mul(a, b), settings)
        if compose(pi(a), pi(b), settings) != product:
            multiplicative = False
            failure = failure or ["pi(ab) != pi(a) o pi(b)", r.format(a), r.format(b)]
        if r.leq(a, b) != (pi(a) <= pi(b)):
            order_embedding = False
            failure = failure or ["order", r.format(a), r.format(b)]

    unital = pi_r(r, r.unit, settings) == identity_element(r, settings)
    return SemiringMapReport(
        name=r.name,
        samples=len(elements),
        eps_pi_identity=eps_pi_identity,
        multiplicative=multiplicative,
        order_embedding=order_embedding,
        unital=unital,
        failure=failure,
    )


def solid_status(name: str, settings: LabSettings | None = None) -> SolidStatusReport:
    """
    Statuses (1)-(5) of a catalog semiring with executable spot checks.

    Spot checks:
        - eps o pi = id and pi multiplicative on samples
        - pi o eps = id on sampled elements of [[R,R]] exactly when (4) holds
        - every nonzero pi(a) is soft when 1 is not compact (Pbar)
        - the implications (2)=>(1), (2)=>(3), (4)=>(3), (4)<=>(5) hold
          for every row of the fact table

    Raises:
        PreconditionError: If the carrier has no fact row or no product
    """
    settings = settings or LabSettings()
    row = facts(name)
    r = catalog(name)
    if not r.has_product:
        raise PreconditionError(f"{name} is not a Cu-semiring")
    statuses = {i: row.status(i) for i in range(1, 6)}
    checks: list[SpotCheck] = []

    try:
        maps = semiring_map_check(r, settings=settings)
    except (NoClosedFormError, UnsupportedOperationError) as exc:
        checks.append(SpotCheck(name="semiring maps", passed=True, detail=f"skipped: {exc}"))
    else:
        checks.append(SpotCheck(name="eps o pi = id", passed=maps.eps_pi_identity, detail=f"{maps.samples} samples"))
        checks.append(SpotCheck(name="pi multiplicative", passed=maps.multiplicative, detail=f"{maps.samples} samples"))

        space = bivariant(r, r, settings)
        sample = sample_elements(space, SEMIRING_SAMPLES, settings.sample_seed)
        missed = [x for x in sample if pi_r(r, eps_r(r, x), settings) != x]
        if statuses[4] is not None:
            expected_surjective = statuses[4]
            detail = "pi o eps = id on every sample" if not missed else f"pi o eps moves {missed[0].format()}"
            checks.append(
                SpotCheck(name="pi surjective matches (4)", passed=(not missed) == expected_surjective, detail=detail)
            )

        if not r.is_compact(r.unit):
            nonzero = [a for a in _semiring_samples(r, SEMIRING_SAMPLES, settings.sample_seed) if not r.eq(a, r.zero)]
            hard = [a for a in nonzero if not space.carrier.is_soft(pi_r(r, a, settings).coordinate)]
            checks.append(
                SpotCheck(
                    name="pi image is soft",
                    passed=not hard,
                    detail=f"{len(nonzero)} samples" if not hard else f"pi({r.format(hard[0])}) is not soft",
                )
            )

    broken = {key: implication_violations(other) for key, other in fact_table().items()}
    broken = {key: problems for key, problems in broken.items() if problems}
    checks.append(
        SpotCheck(
            name="implications over the fact table",
            passed=not broken,
            detail="; ".join(f"{key}: {', '.join(problems)}" for key, problems in broken.items()),
        )
    )
    return SolidStatusReport(
        name=name,
        statuses=statuses,
        spot_checks=checks,
        implications_consistent=not implication_violations(row),
    )


# ---------------------------------------------------------------------------
# Adjunction
# ---------------------------------------------------------------------------


def adjunction_check(s: Carrier, t: Carrier, p: Carrier, settings: LabSettings | None = None) -> AdjunctionReport:
    """
    Certify Cu(S, [[T,P]]) = CuBimor(S x T, P) (= Cu(S (x) T, P)) on finite carriers.

    WHAT: alpha -> ((a, b) -> sigma(alpha(a))(b)) must be a bijection onto
          the bimorphisms and an order-isomorphism for the pointwise orders
    HOW: Both sides are enumerated; the tensor leg runs only when
         S (x) T resolves to a finite catalog carrier, and compares
         beta -> beta o omega with the bimorphisms in the same way

    Raises:
        PreconditionError: If a carrier is infinite or not Cu
        BoundExceededError: If an enumeration exceeds the bound
    """
    s_cu, t_cu, p_cu = _finite_cu(s), _finite_cu(t), _finite_cu(p)
    enumerator = MorphismEnumerator(settings)
    space = bivariant(t_cu, p_cu, settings)
    hom_side = enumerator.morphisms(s_cu, space.carrier)
    bimorphisms = enumerate_bimorphisms(s_cu, t_cu, p_cu, settings)
    bimorphism_set = set(bimorphisms)

    def transpose(alpha: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(space.sigma(alpha[a]).apply(b) for b in t_cu.elements()) for a in s_cu.elements())

    images = [transpose(alpha) for alpha in hom_side]
    failure: list[str] | None = None
    for alpha, image in zip(hom_side, images):
        if image not in bimorphism_set:
            failure = ["not a bimorphism", *space.carrier.labels_of(alpha)]
            break
    bijective = failure is None and len(set(images)) == len(images) == len(bimorphisms)
    if failure is None and not bijective:
        failure = [f"|Cu(S,[[T,P]])| = {len(hom_side)}", f"|CuBimor| = {len(bimorphisms)}"]

    order_isomorphism = bijective
    if bijective:
        for (a1, i1), (a2, i2) in itertools.product(zip(hom_side, images), repeat=2):
            if pointwise_leq(space.carrier, a1, a2) != table_leq(p_cu, i1, i2):
                order_isomorphism = False
                failure = ["order", *space.carrier.labels_of(a1), "vs", *space.carrier.labels_of(a2)]
                break

    tensor_count: int | None = None
    tensor_checked = False
    tensor_holds: bool | None = None
    try:
        product, omega = omega_table(s, t)
    except (NoClosedFormError, PreconditionError):
        pass
    else:
        tensor_checked = True
        tensor_side = enumerator.morphisms(product, p_cu)
        tensor_count = len(tensor_side)
        composites = [precompose(beta, omega) for beta in tensor_side]
        tensor_holds = set(composites) == bimorphism_set and len(set(composites)) == len(composites)
        if tensor_holds:
            tensor_holds = all(
                pointwise_leq(p_cu, b1, b2) == table_leq(p_cu, c1, c2)
                for (b1, c1), (b2, c2) in itertools.product(zip(tensor_side, composites), repeat=2)
            )
        if not tensor_holds and failure is None:
            failure = [f"tensor leg through {product.name}"]

    return AdjunctionReport(
        source=s.name,
        middle=t.name,
        target=p.name,
        hom_side_count=len(hom_side),
        bimorphism_count=len(bimorphisms),
        tensor_side_count=tensor_count,
        bijective=bijective,
        order_isomorphism=order_isomorphism,
        tensor_leg_checked=tensor_checked,
        tensor_leg_holds=tensor_holds,
        failure=failure,
    )


# ---------------------------------------------------------------------------
# Ideals and quotients
# ---------------------------------------------------------------------------


def restrict(t: FiniteQSemigroup, members: frozenset[int], name: str | None = None) -> FiniteQSemigroup:
    """The sub-semigroup on an ideal's members, in T's index order."""
    keep = sorted(members)
    position = {a: i for i, a in enumerate(keep)}
    add = [[position[t.add(a, b)] for b in keep] for a in keep]
    leq = [[int(t.leq(a, b)) for b in keep] for a in keep]
    return FiniteQSemigroup(
        name or f"{t.name}|{{{','.join(t.labels_of(keep))}}}",
        t.labels_of(keep),
        t.label(t.zero),
        add,
        leq,
        validate=False,
    )


def _induced_image(
    ambient: BivariantSemigroup,
    sub: BivariantSemigroup,
    projection: tuple[int, ...],
    inclusion: list[int],
) -> list[int]:
    """Coordinates in [[S,T]] of the elements of [[S',T']] for S -> S' and T' -> T."""
    image = []
    for k in sub.carrier.elements():
        phi = sub.sigma(k)
        table = tuple(inclusion[phi.apply(projection[a])] for a in ambient.source.elements())
        image.append(ambient.coordinate_of(FiniteTable(ambient.source, ambient.target, table)))
    return image


def _embedding_flags(ambient: BivariantSemigroup, sub: BivariantSemigroup, image: list[int]) -> tuple[bool, bool, bool]:
    big = ambient.carrier
    members = set(image)
    order_embedding = len(members) == len(image) and all(
        sub.carrier.leq(k1, k2) == big.leq(image[k1], image[k2])
        for k1, k2 in itertools.product(sub.carrier.elements(), repeat=2)
    )
    submonoid = big.zero in members and all(big.add(x, y) in members for x in members for y in members)
    hereditary = all(y in members for x in members for y in big.elements() if big.leq(y, x))
    return order_embedding, hereditary, submonoid


def ideal_embed_check(
    s: Carrier, t: Carrier, ideal: Ideal, settings: LabSettings | None = None
) -> IdealEmbedReport:
    """
    [[S,J]] inside [[S,T]] for an ideal J of T.

    The image must be exactly the elements of [[S,T]] whose morphism takes
    values in J.
    """
    t_cu = _finite_cu(t)
    ambient = bivariant(s, t_cu, settings)
    j = restrict(t_cu, ideal.members)
    sub = bivariant(s, j, settings)
    inclusion = sorted(ideal.members)
    identity = tuple(ambient.source.elements())
    image = _induced_image(ambient, sub, identity, inclusion)
    order_embedding, hereditary, submonoid = _embedding_flags(ambient, sub, image)

    lands_in_j = {
        x for x in ambient.carrier.elements() if all(ambient.sigma(x).apply(a) in ideal.members for a in identity)
    }
    characterization = lands_in_j == set(image)
    failure = None
    if not characterization:
        odd = sorted(lands_in_j ^ set(image))
        failure = ["image differs from the maps into J at", *ambient.carrier.labels_of(odd)]

    return IdealEmbedReport(
        kind="ideal",
        source=s.name,
        target=t.name,
        ideal=ideal.summary(t_cu),
        sub_count=sub.carrier.size,
        ambient_count=ambient.carrier.size,
        image=ambient.carrier.labels_of(image),
        order_embedding=order_embedding,
        downward_hereditary=hereditary,
        submonoid=submonoid,
        characterization_holds=characterization,
        failure=failure,
    )


def quotient_embed_check(
    s: Carrier, t: Carrier, ideal: Ideal, settings: LabSettings | None = None
) -> IdealEmbedReport:
    """
    [[S/J,T]] inside [[S,T]] for an ideal J of S.

    The image must be exactly the elements of [[S,T]] whose morphism
    vanishes on J.
    """
    s_cu = _finite_cu(s)
    ambient = bivariant(s_cu, t, settings)
    q = quotient(s_cu, ideal)
    sub = bivariant(q.cu, t, settings)
    inclusion = list(ambient.target.elements())
    image = _induced_image(ambient, sub, q.projection, inclusion)
    order_embedding, hereditary, submonoid = _embedding_flags(ambient, sub, image)

    zero = ambient.target.zero
    vanishing = {x for x in ambient.carrier.elements() if all(ambient.sigma(x).apply(a) == zero for a in ideal.members)}
    characterization = vanishing == set(image)
    failure = None
    if not characterization:
        odd = sorted(vanishing ^ set(image))
        failure = ["image differs from the maps vanishing on J at", *ambient.carrier.labels_of(odd)]

    return IdealEmbedReport(
        kind="quotient",
        source=s.name,
        target=t.name,
        ideal=ideal.summary(s_cu),
        sub_count=sub.carrier.size,
        ambient_count=ambient.carrier.size,
        image=ambient.carrier.labels_of(image),
        order_embedding=order_embedding,
        downward_hereditary=hereditary,
        submonoid=submonoid,
        characterization_holds=characterization,
        failure=failure,
    )


def ideal_lattice_map(s: Carrier, t: Carrier, settings: LabSettings | None = None) -> IdealLatticeReport:
    """
    (J, K) -> [[S/J, K]] from Lat(S)^op x Lat(T) to Lat([[S,T]]).

    Finite evidence only: the report says whether the map is injective and
    surjective on this instance.
    """
    s_cu, t_cu = _finite_cu(s), _finite_cu(t)
    ambient = bivariant(s_cu, t_cu, settings)
    entries: list[IdealLatticeEntry] = []
    images: list[frozenset[int]] = []
    for j in enumerate_ideals(s_cu):
        q = quotient(s_cu, j)
        for k in enumerate_ideals(t_cu):
            sub = bivariant(q.cu, restrict(t_cu, k.members), settings)
            image = frozenset(_induced_image(ambient, sub, q.projection, sorted(k.members)))
            if not is_ideal(ambient.carrier, image):
                raise PreconditionError(
                    f"[[S/J,K]] for J={s_cu.labels_of(sorted(j.members))}, K={t_cu.labels_of(sorted(k.members))} "
                    "is not an ideal of [[S,T]]"
                )
            images.append(image)
            entries.append(
                IdealLatticeEntry(
                    source_ideal=s_cu.labels_of(sorted(j.members)),
                    target_ideal=t_cu.labels_of(sorted(k.members)),
                    image=ambient.carrier.labels_of(sorted(image)),
                )
            )
    lattice = {ideal.members for ideal in enumerate_ideals(ambient.carrier)}
    distinct = set(images)
    return IdealLatticeReport(
        source=s.name,
        target=t.name,
        entries=entries,
        lattice_size=len(lattice),
        image_size=len(distinct),
        injective=len(distinct) == len(images),
        surjective=distinct == lattice,
    )


# ---------------------------------------------------------------------------
# Bimodule structure
# ---------------------------------------------------------------------------


def bimodule_check(
    s: Carrier, t: Carrier, samples: int = BIMODULE_SAMPLES, settings: LabSettings | None = None
) -> BimoduleReport:
    """
    [[S,T]] as a ([[T,T]], [[S,S]])-semibimodule under composition, on samples.

    Raises:
        NoClosedFormError: If one of the three spaces has no closed form
    """
    settings = settings or LabSettings()
    seed = settings.sample_seed
    space = bivariant(s, t, settings)
    xs = sample_elements(space, samples, seed)
    lefts = sample_elements(bivariant(t, t, settings), samples, seed + 1)
    rights = sample_elements(bivariant(s, s, settings), samples, seed + 2)
    one_t, one_s = identity_element(t, settings), identity_element(s, settings)
    failure: list[str] | None = None

    unit_laws = True
    for x in xs:
        if compose(one_t, x, settings) != x or compose(x, one_s, settings) != x:
            unit_laws = False
            failure = failure or ["unit", x.format()]

    associative = True
    for r1, r2, x in itertools.product(lefts, lefts, xs):
        if compose(compose(r1, r2, settings), x, settings) != compose(r1, compose(r2, x, settings), settings):
            associative = False
            failure = failure or ["left associativity", r1.format(), r2.format(), x.format()]
    for x, l1, l2 in itertools.product(xs, rights, rights):
        if compose(x, compose(l1, l2, settings), settings) != compose(compose(x, l1, settings), l2, settings):
            associative = False
            failure = failure or ["right associativity", x.format(), l1.format(), l2.format()]

    compatible = True
    for r, x, l in itertools.product(lefts, xs, rights):
        if compose(r, compose(x, l, settings), settings) != compose(compose(r, x, settings), l, settings):
            compatible = False
            failure = failure or ["r(x l) != (r x) l", r.format(), x.format(), l.format()]

    return BimoduleReport(
        source=s.name,
        target=t.name,
        samples=len(xs),
        unit_laws=unit_laws,
        associative=associative,
        compatible=compatible,
        failure=failure,
    )


# ---------------------------------------------------------------------------
# Non-simplicity of [[Sex,Sex]]
# ---------------------------------------------------------------------------


def hex_nonsimple_witness(samples: int = 48, settings: LabSettings | None = None) -> NonSimplicityReport:
    """
    The ideal {x <= soft(inf)} of [[Sex,Sex]] = Hex, which misses cpt(inf).

    Also checks the carrier: dilations by t >= 1 (and 0) round-trip through
    the closed form, dilations by 0 < t < 1 are refused as non-additive.
    """
    settings = settings or LabSettings()
    sex = TruncatedInterval()
    space = bivariant(sex, sex, settings)
    hex_carrier = space.carrier
    bound, witness = Soft(INF), Compact(INF)
    pool = hex_carrier.sample(samples, settings.sample_seed)
    members = [x for x in pool if hex_carrier.leq(x, bound)]
    failure: list[str] | None = None

    submonoid = hex_carrier.zero in members and all(
        hex_carrier.leq(hex_carrier.add(x, y), bound) for x in members for y in members
    )
    hereditary = all(hex_carrier.leq(y, bound) for x in members for y in pool if hex_carrier.leq(y, x))
    excludes = not hex_carrier.leq(witness, bound) and hex_carrier.is_compact(witness)
    if not (submonoid and hereditary and excludes):
        failure = ["ideal below", hex_carrier.format(bound)]

    carrier_matches = True
    for factor in [Fraction(0), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3), INF]:
        coordinate = Compact(factor)
        if space.coordinate_of(space.sigma(coordinate)) != coordinate:
            carrier_matches = False
            failure = failure or ["dilation does not round-trip", hex_carrier.format(coordinate)]
    for factor in [Fraction(1, 2), Fraction(2, 3), Fraction(9, 10)]:
        dilation = ScalarMul(sex, sex, hex_carrier, Compact(factor), lambda f, a: sex.dilate(f.value, a))
        try:
            space.coordinate_of(dilation)
        except PreconditionError:
            continue
        carrier_matches = False
        failure = failure or ["dilation accepted below 1", str(factor)]

    return NonSimplicityReport(
        space=space.name,
        carrier=hex_carrier.name,
        bound=hex_carrier.format(bound),
        excluded=hex_carrier.format(witness),
        samples=len(pool),
        submonoid=submonoid,
        downward_hereditary=hereditary,
        excludes_witness=excludes,
        carrier_matches=carrier_matches,
        failure=failure,
    )


__all__ = [
    "SEMIRING_SAMPLES",
    "semiring_map_check",
    "solid_status",
    "adjunction_check",
    "restrict",
    "ideal_embed_check",
    "quotient_embed_check",
    "ideal_lattice_map",
    "bimodule_check",
    "hex_nonsimple_witness",
]
