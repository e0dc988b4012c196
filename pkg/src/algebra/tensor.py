"""
Tensor Product Calculator for cuntzlab

Catalog resolution of tensor products, formal sums of simple tensors,
bimorphism enumeration and a finite falsifier for the universal property.

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (tensor_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
There is no general tensor construction here. The product S (x) T is only
known through rewrite rules on catalog names:

    Nbar (x) S        = S              (Nbar is the unit)
    {0} (x) S         = {0}
    Nbar^k (x) Nbar^l = Nbar^(k*l)
    R_p (x) R_q       = R_pq,  Z (x) R_p = R_p,  Q (x) R_p = Q
    R (x) R           = R              (R a solid Cu-semiring, e.g. E_k, Pbar)

A query is normalized as a whole (unit factors removed, powers multiplied,
prime sets united, equal solid factors merged, the rest sorted), so the
answer does not depend on bracketing or order. Anything left with two
distinct factors has no closed form.

The universal property is tested, not proved: for every finite
Cu-semigroup Q up to a bound and every bimorphism phi: S x T -> Q, the
falsifier looks for the unique alpha: P -> Q with phi = alpha o omega.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from src.algebra.catalog import (
    ExtendedNaturals,
    ExtendedRationals,
    NbarPower,
    UHFSemigroup,
    catalog,
    finite_carrier,
)
from src.algebra.core_order import Carrier, Pom
from src.algebra.errors import (
    InvalidBimorphismError,
    NoClosedFormError,
    PreconditionError,
    StructureError,
)
from src.algebra.extended import is_inf, nat_mul
from src.algebra.finite_q import (
    FiniteQSemigroup,
    MorphismEnumerator,
    MorphismTable,
    enumerate_finite_cu,
    extend_additively,
    generators,
    pointwise_leq,
    trivial,
)
from src.algebra.semiring_facts import facts
from src.models.settings_inputs import LabSettings
from src.models.tensor_inputs import (
    FalsifierReport,
    FalsifierViolation,
    TensorQuery,
    TensorResolution,
)

BimorphismTable = tuple[tuple[int, ...], ...]

TRIVIAL_NAME = "{0}"


# ---------------------------------------------------------------------------
# Catalog resolution
# ---------------------------------------------------------------------------


def _is_solid(name: str) -> bool:
    try:
        row = facts(name)
    except PreconditionError:
        return False
    return row.solid is not None and row.solid.value is True


def _factor_carrier(name: str) -> Carrier | None:
    if name == TRIVIAL_NAME:
        return None
    carrier = catalog(name)
    if isinstance(carrier, ExtendedRationals) and carrier.mode != "waybelow":
        raise NoClosedFormError(f"{name} is a Q-semigroup; tensor products are taken between Cu-semigroups")
    return carrier


def tensor_catalog(query: TensorQuery) -> TensorResolution:
    """
    Resolve S1 (x) ... (x) Sn by rewriting to a single catalog carrier.

    Args:
        query: Two or more catalog names ("{0}" is the zero semigroup)

    Returns:
        TensorResolution with the normal form, the result name and the rules used

    Raises:
        PreconditionError: Unknown catalog name
        NoClosedFormError: If two distinct factors survive normalization

    USAGE EXAMPLE:
        tensor_catalog(TensorQuery.of("R{2}", "R{3}")).result    # "R{2,3}"
        tensor_catalog(TensorQuery.of("E2", "Nbar")).result      # "E2"
    """
    rules: list[str] = []
    power = 1
    power_factors = 0
    primes: set[int] | None = set()
    uhf_factors: list[UHFSemigroup] = []
    others: list[str] = []

    carriers = [_factor_carrier(name) for name in query.factors]
    if any(carrier is None for carrier in carriers):
        return TensorResolution(
            factors=query.factors,
            normal_form=[TRIVIAL_NAME],
            result=TRIVIAL_NAME,
            rules=["{0} (x) S = {0}"],
            simple_tensor="s (x) t = 0",
        )

    for carrier in carriers:
        if isinstance(carrier, ExtendedNaturals):
            rules.append("Nbar (x) S = S")
        elif isinstance(carrier, NbarPower):
            power *= carrier.k
            power_factors += 1
        elif isinstance(carrier, UHFSemigroup):
            uhf_factors.append(carrier)
            if primes is not None:
                primes = None if carrier.primes is None else primes | carrier.primes
        else:
            others.append(carrier.name)

    normal_form: list[str] = []
    embedding = "n (x) s = n*s"
    if power_factors:
        if power_factors > 1:
            rules.append("Nbar^k (x) Nbar^l = Nbar^(k*l)")
            embedding = "u (x) v = Kronecker product of the tuples"
        if power > 1:
            normal_form.append(f"Nbar^{power}")
        else:
            rules.append("Nbar^1 = Nbar")
    if uhf_factors:
        merged = UHFSemigroup(primes)
        if len(uhf_factors) > 1:
            if merged.primes is None and any(f.primes is not None for f in uhf_factors):
                rules.append("Q (x) R_p = Q")
            if any(f.primes == frozenset() for f in uhf_factors):
                rules.append("Z (x) R_p = R_p")
            if sum(1 for f in uhf_factors if f.primes) > 1:
                rules.append("R_p (x) R_q = R_pq")
            embedding = f"a (x) b = a*b in {merged.name}"
        normal_form.append(merged.name)
    for name in sorted(set(others)):
        count = others.count(name)
        if count > 1 and _is_solid(name):
            rules.append(f"{name} is solid: {name} (x) {name} = {name}")
            embedding = f"a (x) b = a*b in {name}"
            normal_form.append(name)
        else:
            normal_form.extend([name] * count)

    normal_form.sort()
    if len(normal_form) > 1:
        raise NoClosedFormError(f"No closed form for {' (x) '.join(normal_form)}")
    result = normal_form[0] if normal_form else "Nbar"
    return TensorResolution(
        factors=query.factors,
        normal_form=normal_form or ["Nbar"],
        result=result,
        rules=list(dict.fromkeys(rules)),
        simple_tensor=embedding,
    )


def _catalog_twin(carrier: Carrier) -> Carrier | None:
    """The catalog carrier a tabulated semigroup was built from, if any."""
    if not isinstance(carrier, Pom):
        return carrier
    if carrier.size == 1:
        return None
    try:
        twin = catalog(carrier.name)
    except PreconditionError:
        return None
    if twin.is_finite and finite_carrier(twin).same_as(carrier):
        return twin
    return None


def tensor_carrier(left: Carrier, right: Carrier) -> Carrier:
    """
    The carrier of left (x) right.

    Nbar and {0} resolve against any carrier and powers of Nbar multiply
    (Nbar^1 (x) Nbar^1 stays Nbar^1); tabulated semigroups resolve further
    only when they are a catalog carrier in table form.

    Raises:
        NoClosedFormError: If the product has no closed form
    """
    if isinstance(left, ExtendedNaturals):
        return right
    if isinstance(right, ExtendedNaturals):
        return left
    if isinstance(left, NbarPower) and isinstance(right, NbarPower):
        return NbarPower(left.k * right.k)
    for side in (left, right):
        if isinstance(side, Pom) and side.size == 1:
            return trivial()
    left_twin, right_twin = _catalog_twin(left), _catalog_twin(right)
    if left_twin is None or right_twin is None:
        raise NoClosedFormError(f"No closed form for {left.name} (x) {right.name}")
    resolution = tensor_catalog(TensorQuery.of(left_twin.name, right_twin.name))
    return catalog(resolution.result)


def _to_catalog(carrier: Carrier, element: Any) -> tuple[Carrier, Any]:
    twin = _catalog_twin(carrier)
    if twin is None or twin is carrier:
        return carrier, element
    return twin, twin.parse(carrier.format(element))


def simple_tensor(left: Carrier, right: Carrier, a: Any, b: Any) -> Any:
    """
    The image of a (x) b in tensor_carrier(left, right).

    Raises:
        NoClosedFormError: If the product has no closed form
    """
    result = tensor_carrier(left, right)
    if isinstance(left, ExtendedNaturals):
        return result.sup_multiple(b) if is_inf(a) else result.multiple(int(a), b)
    if isinstance(right, ExtendedNaturals):
        return result.sup_multiple(a) if is_inf(b) else result.multiple(int(b), a)
    if isinstance(result, Pom) and result.size == 1:
        return result.zero

    left, a = _to_catalog(left, a)
    right, b = _to_catalog(right, b)
    if isinstance(left, NbarPower) and isinstance(right, NbarPower):
        return tuple(nat_mul(x, y) for x in a for y in b)
    if isinstance(result, UHFSemigroup):
        return result.make(result.mul(a, b))
    return result.mul(a, b)


def omega_table(left: Carrier, right: Carrier) -> tuple[FiniteQSemigroup, BimorphismTable]:
    """
    The canonical bimorphism S x T -> S (x) T of a finite resolved product.

    Returns:
        (P, table) with table[a][b] the index of a (x) b in P; a and b are
        indices of the tabulated S and T

    Raises:
        NoClosedFormError: If the product has no closed form
        PreconditionError: If the product is infinite
    """
    result = tensor_carrier(left, right)
    p = finite_carrier(result)
    s, t = finite_carrier(left), finite_carrier(right)
    left_elements = left.elements() if not isinstance(left, Pom) else s.elements()
    right_elements = right.elements() if not isinstance(right, Pom) else t.elements()
    table = tuple(
        tuple(p.parse(result.format(simple_tensor(left, right, a, b))) for b in right_elements)
        for a in left_elements
    )
    return p, table


# ---------------------------------------------------------------------------
# Formal sums of simple tensors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormalTensor:
    """
    A finite multiset of simple tensors s (x) t.

    Terms are kept as given; bilinear_normalize removes zero factors and
    fixes the order. No two terms are ever merged.
    """

    left: Carrier
    right: Carrier
    terms: tuple[tuple[Any, Any], ...] = ()

    def __add__(self, other: "FormalTensor") -> "FormalTensor":
        if not (self.left.same_as(other.left) and self.right.same_as(other.right)):
            raise PreconditionError("Formal tensors over different carriers cannot be added")
        return FormalTensor(self.left, self.right, self.terms + other.terms)

    def format(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{self.left.format(a)} (x) {self.right.format(b)}" for a, b in self.terms)

    @classmethod
    def parse(cls, left: Carrier, right: Carrier, text: str) -> "FormalTensor":
        """
        Parse "a (x) b + c (x) d"; "0" is the empty sum.

        Raises:
            StructureError: If a term has no "(x)" separator or a bad element
        """
        token = text.strip()
        if token in ("", "0"):
            return cls(left, right)
        terms = []
        for part in token.split("+"):
            a_text, separator, b_text = part.partition("(x)")
            if not separator:
                raise StructureError(f"Expected 'a (x) b' in {part.strip()!r}")
            terms.append((left.parse(a_text), right.parse(b_text)))
        return cls(left, right, tuple(terms))


def bilinear_normalize(t: FormalTensor) -> FormalTensor:
    """Drop terms with a zero factor and sort the rest by their labels."""
    kept = [
        (a, b)
        for a, b in t.terms
        if not (t.left.eq(a, t.left.zero) or t.right.eq(b, t.right.zero))
    ]
    kept.sort(key=lambda term: (t.left.format(term[0]), t.right.format(term[1])))
    return FormalTensor(t.left, t.right, tuple(kept))


def embed(t: FormalTensor) -> Any:
    """
    The element of the resolved product represented by the sum.

    Raises:
        NoClosedFormError: If left (x) right has no closed form
    """
    result = tensor_carrier(t.left, t.right)
    return result.total(simple_tensor(t.left, t.right, a, b) for a, b in t.terms)


# ---------------------------------------------------------------------------
# Bimorphisms and the universal property
# ---------------------------------------------------------------------------


def _finite_cu(carrier: Carrier) -> FiniteQSemigroup:
    finite = finite_carrier(carrier)
    if not finite.is_cu:
        raise PreconditionError(f"{carrier.name} is a Q-semigroup, not a Cu-semigroup")
    return finite


def enumerate_bimorphisms(
    s: Carrier, t: Carrier, q: Carrier, settings: LabSettings | None = None
) -> list[BimorphismTable]:
    """
    Every Cu-bimorphism S x T -> Q between finite Cu-semigroups.

    HOW: phi(-, b) is a morphism S -> Q for every b, so a bimorphism is a
         choice of such a column for each generator of T, extended
         additively in b and kept when it is monotone in b. On finite
         carriers way-below is the order, so joint way-below preservation
         follows from monotonicity.

    Raises:
        BoundExceededError: If the column choices exceed the bound
    """
    s, t, q = _finite_cu(s), _finite_cu(t), _finite_cu(q)
    enumerator = MorphismEnumerator(settings)
    columns = enumerator.morphisms(s, q)
    gens = generators(t)
    enumerator.check_bound(f"bimorphisms {s.name} x {t.name} -> {q.name}", len(columns) ** len(gens))

    def add_columns(f: MorphismTable, g: MorphismTable) -> MorphismTable:
        return tuple(q.add(x, y) for x, y in zip(f, g))

    zero_column = tuple([q.zero] * s.size)
    order_pairs = [(b1, b2) for b1 in t.elements() for b2 in t.elements() if b1 != b2 and t.leq(b1, b2)]
    found = []
    for choice in itertools.product(columns, repeat=len(gens)):
        by_b = extend_additively(t, gens, choice, add_columns, zero_column)
        if by_b is None:
            continue
        if not all(pointwise_leq(q, by_b[b1], by_b[b2]) for b1, b2 in order_pairs):
            continue
        found.append(tuple(tuple(by_b[b][a] for b in t.elements()) for a in s.elements()))
    return sorted(found)


def validate_bimorphism(s: Carrier, t: Carrier, p: Carrier, table: Sequence[Sequence[int]]) -> BimorphismTable:
    """
    Check that omega is a Cu-bimorphism S x T -> P.

    Returns:
        The table as nested tuples

    Raises:
        StructureError: Wrong shape or out-of-range indices
        InvalidBimorphismError: With `law` one of zero, additive_left,
            additive_right, monotone_left, monotone_right, joint_waybelow
    """
    s, t, p = _finite_cu(s), _finite_cu(t), _finite_cu(p)
    if len(table) != s.size or any(len(row) != t.size for row in table):
        raise StructureError(f"omega must be a {s.size}x{t.size} table")
    omega = tuple(tuple(int(v) for v in row) for row in table)
    if any(not 0 <= v < p.size for row in omega for v in row):
        raise StructureError(f"omega has entries outside 0..{p.size - 1}")

    def fail(law: str, *witness: str) -> None:
        raise InvalidBimorphismError(f"omega is not a Cu-bimorphism: {law} fails at ({', '.join(witness)})", law)

    for a in s.elements():
        if omega[a][t.zero] != p.zero:
            fail("zero", s.label(a), t.label(t.zero))
    for b in t.elements():
        if omega[s.zero][b] != p.zero:
            fail("zero", s.label(s.zero), t.label(b))

    pairs_s = list(itertools.product(s.elements(), repeat=2))
    pairs_t = list(itertools.product(t.elements(), repeat=2))
    for (a1, a2), b in itertools.product(pairs_s, t.elements()):
        if omega[s.add(a1, a2)][b] != p.add(omega[a1][b], omega[a2][b]):
            fail("additive_left", s.label(a1), s.label(a2), t.label(b))
    for a, (b1, b2) in itertools.product(s.elements(), pairs_t):
        if omega[a][t.add(b1, b2)] != p.add(omega[a][b1], omega[a][b2]):
            fail("additive_right", s.label(a), t.label(b1), t.label(b2))
    for (a1, a2), b in itertools.product(pairs_s, t.elements()):
        if s.leq(a1, a2) and not p.leq(omega[a1][b], omega[a2][b]):
            fail("monotone_left", s.label(a1), s.label(a2), t.label(b))
    for a, (b1, b2) in itertools.product(s.elements(), pairs_t):
        if t.leq(b1, b2) and not p.leq(omega[a][b1], omega[a][b2]):
            fail("monotone_right", s.label(a), t.label(b1), t.label(b2))
    for (a1, a2), (b1, b2) in itertools.product(pairs_s, pairs_t):
        if s.waybelow(a1, a2) and t.waybelow(b1, b2) and not p.waybelow(omega[a1][b1], omega[a2][b2]):
            fail("joint_waybelow", s.label(a1), s.label(a2), t.label(b1), t.label(b2))
    return omega


def precompose(alpha: MorphismTable, omega: BimorphismTable) -> BimorphismTable:
    return tuple(tuple(alpha[v] for v in row) for row in omega)


def table_leq(q: Pom, f: BimorphismTable, g: BimorphismTable) -> bool:
    return all(q.leq(x, y) for row_f, row_g in zip(f, g) for x, y in zip(row_f, row_g))


def _rows(table: BimorphismTable) -> list[list[int]]:
    return [list(row) for row in table]


def universal_property_falsify(
    s: Carrier,
    t: Carrier,
    p: Carrier,
    omega: Sequence[Sequence[int]],
    bound: int | None = None,
    settings: LabSettings | None = None,
) -> FalsifierReport:
    """
    Search for a test object that breaks the universal property of (P, omega).

    For every finite Cu-semigroup Q with at most `bound` elements and every
    bimorphism phi: S x T -> Q, exactly one morphism alpha: P -> Q must
    satisfy alpha o omega = phi, and alpha1 o omega <= alpha2 o omega must
    imply alpha1 <= alpha2.

    Returns:
        FalsifierReport with the first violation, or none up to the bound

    Raises:
        InvalidBimorphismError: If omega is not a Cu-bimorphism (checked first)
        BoundExceededError: If an enumeration exceeds the configured bound
    """
    settings = settings or LabSettings()
    bound = bound or settings.falsifier_bound
    table = validate_bimorphism(s, t, p, omega)
    s_cu, t_cu, p_cu = _finite_cu(s), _finite_cu(t), _finite_cu(p)
    enumerator = MorphismEnumerator(settings)
    family = enumerate_finite_cu(bound)
    checked = 0

    def report(violation: FalsifierViolation | None) -> FalsifierReport:
        return FalsifierReport(
            left=s.name,
            right=t.name,
            candidate=p.name,
            bound=bound,
            test_objects=len(family),
            bimorphisms_checked=checked,
            violation=violation,
        )

    for q in family:
        alphas = enumerator.morphisms(p_cu, q)
        factorizations: dict[BimorphismTable, list[MorphismTable]] = {}
        for alpha in alphas:
            factorizations.setdefault(precompose(alpha, table), []).append(alpha)

        for phi in enumerate_bimorphisms(s_cu, t_cu, q, settings):
            checked += 1
            found = factorizations.get(phi, [])
            if len(found) != 1:
                kind = "no_factorization" if not found else "not_unique"
                return report(
                    FalsifierViolation(
                        kind=kind,
                        test_object=q.to_structure(),
                        phi=_rows(phi),
                        alphas=[list(alpha) for alpha in found[:2]],
                        message=f"{len(found)} morphisms {p.name} -> {q.name} factor phi",
                    )
                )

        for alpha1, alpha2 in itertools.product(alphas, repeat=2):
            composite1, composite2 = precompose(alpha1, table), precompose(alpha2, table)
            if table_leq(q, composite1, composite2) and not pointwise_leq(q, alpha1, alpha2):
                return report(
                    FalsifierViolation(
                        kind="order_reflection",
                        test_object=q.to_structure(),
                        phi=_rows(composite1),
                        alphas=[list(alpha1), list(alpha2)],
                        message="alpha1 o omega <= alpha2 o omega but alpha1 is not below alpha2",
                    )
                )
    return report(None)


def replay_violation(
    s: Carrier,
    t: Carrier,
    p: Carrier,
    omega: Sequence[Sequence[int]],
    violation: FalsifierViolation,
    settings: LabSettings | None = None,
) -> bool:
    """
    Re-check a stored violation from its tables alone.

    Returns:
        True iff the violation is genuine
    """
    table = validate_bimorphism(s, t, p, omega)
    p_cu = _finite_cu(p)
    q = FiniteQSemigroup.from_structure(violation.test_object)
    phi = tuple(tuple(row) for row in violation.phi)
    morphisms = set(MorphismEnumerator(settings).morphisms(p_cu, q))
    alphas = [tuple(alpha) for alpha in violation.alphas]
    if any(alpha not in morphisms for alpha in alphas):
        return False

    if violation.kind == "no_factorization":
        try:
            validate_bimorphism(s, t, q, phi)
        except InvalidBimorphismError:
            return False
        return all(precompose(alpha, table) != phi for alpha in morphisms)
    if violation.kind == "not_unique":
        return len(set(alphas)) == 2 and all(precompose(alpha, table) == phi for alpha in alphas)
    alpha1, alpha2 = alphas
    return table_leq(q, precompose(alpha1, table), precompose(alpha2, table)) and not pointwise_leq(q, alpha1, alpha2)


__all__ = [
    "BimorphismTable",
    "TRIVIAL_NAME",
    "tensor_catalog",
    "tensor_carrier",
    "simple_tensor",
    "omega_table",
    "FormalTensor",
    "bilinear_normalize",
    "embed",
    "enumerate_bimorphisms",
    "validate_bimorphism",
    "precompose",
    "table_leq",
    "universal_property_falsify",
    "replay_violation",
]
