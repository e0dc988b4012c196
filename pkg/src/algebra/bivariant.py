"""
Bivariant Cu-Semigroup Calculator for cuntzlab

Construction and arithmetic of the bivariant Cu-semigroup [[S,T]]: the
hom Q-semigroup of a finite pair, the closed-form table, the endpoint map
sigma, evaluation, the composition and external tensor products, the unit
map, and the semiring maps pi_R / eps_R with the induced actions.

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (bivariant_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
A generalized Cu-morphism is additive, monotone, zero- and sup-preserving
but need not preserve way-below. They form a Q-semigroup Cu[S,T] under
pointwise addition and order, with

    phi < psi   iff   phi(a') << psi(a) whenever a' << a,

and [[S,T]] is tau of that Q-semigroup. Two regimes are supported:

    finite engine   S and T finite: way-below is the order, so phi < psi
                    is pointwise <=, every morphism is self-related and
                    [[S,T]] is the hom monoid itself (all elements compact)
    closed forms    a fixed table of infinite pairs, each realised by a
                    catalog carrier plus explicit maps in both directions

    source          target          [[S,T]]
    Nbar            any catalog S   S            (iota)
    Nbar^k          Nbar^l          Mat[l,k]
    Pbar            Pbar            M1
    R_p             R_q, p | q      R_q          (R_1 = Z, Q = all primes)
    R_p             R_q, p !| q     Pbar
    R_q             Pbar            Pbar
    Pbar            R_q             M1
    Sex             Sex             Hex
    M1              M1              M1

Any other pair raises NoClosedFormError; nothing is approximated.

ELEMENT SYNTAX:
    "S->T:coordinate", e.g. "Pbar->Pbar:soft(2)" or "E2->E3:3"

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from src.algebra.catalog import (
    Compact,
    CompactSoftCarrier,
    ExtendedNaturals,
    ExtendedRationals,
    FactorSemigroup,
    Matrix,
    NbarMatrices,
    NbarPower,
    Soft,
    TruncatedInterval,
    UHFSemigroup,
    catalog,
    finite_carrier,
    identity_matrix,
    kronecker,
    mat_apply,
    mat_mul,
)
from src.algebra.core_order import Carrier
from src.algebra.errors import NoClosedFormError, PreconditionError, StructureError
from src.algebra.extended import INF, ext_mul, is_inf
from src.algebra.finite_q import (
    FiniteQSemigroup,
    MorphismEnumerator,
    MorphismTable,
    generators,
    tau_finite,
)
from src.algebra.tensor import tensor_carrier
from src.models.bivariant_inputs import (
    BivariantKind,
    BivariantSummary,
    CompactMorphismReport,
    HomSummary,
)
from src.models.settings_inputs import LabSettings

# samples used to compare maps on infinite sources
MAP_SAMPLES = 24


# ---------------------------------------------------------------------------
# Generalized Cu-morphisms
# ---------------------------------------------------------------------------


class GenMorphism(ABC):
    """
    A generalized Cu-morphism S -> T that can be applied exactly.

    Two morphisms are equal when they agree on every element of a finite
    source, or on the deterministic sample of an infinite one.
    """

    source: Carrier
    target: Carrier

    @abstractmethod
    def apply(self, a: Any) -> Any: ...

    @abstractmethod
    def describe(self) -> str: ...

    def __call__(self, a: Any) -> Any:
        return self.apply(a)

    def test_points(self) -> list[Any]:
        if self.source.is_finite:
            return self.source.elements()
        return self.source.sample(MAP_SAMPLES, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenMorphism):
            return NotImplemented
        if not (self.source.same_as(other.source) and self.target.same_as(other.target)):
            return False
        return all(self.target.eq(self.apply(a), other.apply(a)) for a in self.test_points())

    def __hash__(self) -> int:
        return hash((self.source.name, self.target.name))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.source.name} -> {self.target.name}: {self.describe()})"


@dataclass(frozen=True, eq=False, repr=False)
class FiniteTable(GenMorphism):
    """A value table between finite carriers (indices in, indices out)."""

    source: FiniteQSemigroup
    target: FiniteQSemigroup
    table: MorphismTable

    def apply(self, a: int) -> int:
        return self.table[a]

    def describe(self) -> str:
        return ", ".join(f"{self.source.label(a)}->{self.target.label(v)}" for a, v in enumerate(self.table))


@dataclass(frozen=True, eq=False, repr=False)
class ScalarMul(GenMorphism):
    """x -> factor * x for a closed-form multiplication rule."""

    source: Carrier
    target: Carrier
    factor_carrier: Carrier
    factor: Any
    rule: Callable[[Any, Any], Any] = field(compare=False)

    def apply(self, a: Any) -> Any:
        return self.rule(self.factor, a)

    def describe(self) -> str:
        return f"x -> {self.factor_carrier.format(self.factor)}*x"


@dataclass(frozen=True, eq=False, repr=False)
class MatrixMap(GenMorphism):
    """v -> A v between powers of Nbar; a plain Nbar target reads the single row."""

    source: Carrier
    target: Carrier
    matrix: Matrix

    def apply(self, a: tuple) -> Any:
        image = mat_apply(self.matrix, a)
        return image[0] if isinstance(self.target, ExtendedNaturals) else image

    def describe(self) -> str:
        return NbarMatrices(len(self.matrix), len(self.matrix[0])).format(self.matrix)


@dataclass(frozen=True, eq=False, repr=False)
class ComposedForm(GenMorphism):
    """Parts applied left to right; no parts is the identity."""

    source: Carrier
    target: Carrier
    parts: tuple[GenMorphism, ...] = ()

    def apply(self, a: Any) -> Any:
        for part in self.parts:
            a = part.apply(a)
        return a

    def describe(self) -> str:
        if not self.parts:
            return "id"
        return " o ".join(part.describe() for part in reversed(self.parts))


@dataclass(frozen=True, eq=False, repr=False)
class ZeroMap(GenMorphism):
    source: Carrier
    target: Carrier

    def apply(self, a: Any) -> Any:
        return self.target.zero

    def describe(self) -> str:
        return "0"


def identity_map(s: Carrier) -> ComposedForm:
    return ComposedForm(s, s, ())


def add_maps(f: GenMorphism, g: GenMorphism) -> "SummedMap":
    if not (f.source.same_as(g.source) and f.target.same_as(g.target)):
        raise PreconditionError(f"cannot add maps {f!r} and {g!r}")
    return SummedMap(f.source, f.target, f, g)


@dataclass(frozen=True, eq=False, repr=False)
class SummedMap(GenMorphism):
    """The pointwise sum of two maps."""

    source: Carrier
    target: Carrier
    left: GenMorphism
    right: GenMorphism

    def apply(self, a: Any) -> Any:
        return self.target.add(self.left.apply(a), self.right.apply(a))

    def describe(self) -> str:
        return f"({self.left.describe()}) + ({self.right.describe()})"


# ---------------------------------------------------------------------------
# Hom Q-semigroup of a finite pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomMonoid:
    """
    Cu[S,T] for finite S, T.

    `semigroup` has one element per morphism table, in enumeration order;
    `tables[i]` is the table of element i.
    """

    semigroup: FiniteQSemigroup
    tables: tuple[MorphismTable, ...]
    generators: tuple[int, ...]
    source: FiniteQSemigroup
    target: FiniteQSemigroup

    def morphism(self, i: int) -> FiniteTable:
        return FiniteTable(self.source, self.target, self.tables[i])

    def summary(self) -> HomSummary:
        return HomSummary(
            source=self.source.name,
            target=self.target.name,
            generators=self.source.labels_of(self.generators),
            labels=list(self.semigroup.labels),
            morphisms=[
                {self.source.label(a): self.target.label(v) for a, v in enumerate(table)} for table in self.tables
            ],
            count=len(self.tables),
        )


def _as_finite_cu(s: Carrier) -> FiniteQSemigroup:
    finite = finite_carrier(s)
    if not finite.is_cu:
        raise PreconditionError(f"{s.name} is a Q-semigroup, not a Cu-semigroup (aux != leq)")
    return finite


def hom_monoid_finite(s: Carrier, t: Carrier, settings: LabSettings | None = None) -> HomMonoid:
    """
    Enumerate every generalized Cu-morphism between finite Cu-semigroups.

    Args:
        s: Finite source (catalog carrier or FiniteQSemigroup)
        t: Finite target

    Returns:
        HomMonoid with pointwise addition and order, and the auxiliary
        relation phi < psi iff phi(a') << psi(a) for all a' << a

    Raises:
        BoundExceededError: If |T|^|generators of S| exceeds the bound
        PreconditionError: If either carrier is infinite or not Cu

    EDUCATIONAL NOTE:
    Labels are the image of the single generator when S is generated by
    one element (E_k), so Cu[E2,E3] reads {0,2,3,inf}; otherwise the
    tuple of generator images.
    """
    source, target = _as_finite_cu(s), _as_finite_cu(t)
    gens = generators(source)
    tables = MorphismEnumerator(settings).morphisms(source, target)
    m = len(tables)
    values = np.array(tables, dtype=np.int64).reshape(m, source.size)

    sums = target.add_table[values[:, None, :], values[None, :, :]]  # [phi, psi, a]
    position = {table: i for i, table in enumerate(tables)}
    add = [[position[tuple(int(v) for v in sums[i, j])] for j in range(m)] for i in range(m)]
    leq = target.leq_table[values[:, None, :], values[None, :, :]].all(axis=2)
    # phi(a') << psi(a) for every a' << a; way-below is the order on both sides
    reached = target.leq_table[values[:, None, :, None], values[None, :, None, :]]  # [phi, psi, a', a]
    aux = (reached | ~source.leq_table[None, None, :, :]).all(axis=(2, 3))

    def label(table: MorphismTable) -> str:
        if not gens:
            return "0"
        if len(gens) == 1:
            return target.label(table[gens[0]])
        return "(" + ",".join(target.label(table[g]) for g in gens) + ")"

    labels = [label(table) for table in tables]
    zero_table = tuple([target.zero] * source.size)
    semigroup = FiniteQSemigroup(
        f"Cu[{source.name},{target.name}]",
        labels,
        labels[position[zero_table]],
        add,
        leq,
        aux,
        validate=False,
    )
    return HomMonoid(semigroup, tuple(tables), tuple(gens), source, target)


# ---------------------------------------------------------------------------
# Bivariant semigroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BivariantSemigroup:
    """
    [[S,T]] realised by a carrier with explicit witness maps.

    WHAT: The carrier of [[S,T]], sigma (coordinate -> endpoint morphism)
          and coordinate_of (morphism -> coordinate)
    WHY: Every operation on bivariant elements goes through these two maps
    HOW: Finite pairs carry the hom monoid; closed forms carry two rules

    USAGE EXAMPLE:
        space = bivariant(catalog("Pbar"), catalog("Pbar"))
        space.carrier.name                        # "M1"
        space.sigma(Soft(Fraction(2)))(Fraction(3))   # 6
    """

    source: Carrier
    target: Carrier
    carrier: Carrier
    kind: BivariantKind
    sigma_rule: Callable[[Any], GenMorphism] = field(repr=False)
    coordinate_rule: Callable[[GenMorphism], Any] = field(repr=False)
    citation: str = ""
    hom: HomMonoid | None = field(default=None, repr=False)

    @property
    def name(self) -> str:
        return f"[[{self.source.name},{self.target.name}]]"

    def sigma(self, coordinate: Any) -> GenMorphism:
        return self.sigma_rule(coordinate)

    def coordinate_of(self, phi: GenMorphism) -> Any:
        """
        The coordinate whose endpoint morphism is phi.

        Closed forms return the compact coordinate when a compact and a
        soft coordinate share the same endpoint.

        Raises:
            PreconditionError: If phi is not a generalized Cu-morphism S -> T
                               realised by this carrier
        """
        if not (phi.source.same_as(self.source) and phi.target.same_as(self.target)):
            raise PreconditionError(
                f"{phi!r} is not a map {self.source.name} -> {self.target.name}"
            )
        return self.coordinate_rule(phi)

    def element(self, coordinate: Any) -> "BivariantElement":
        return BivariantElement(self, coordinate)

    def parse(self, text: str) -> "BivariantElement":
        return BivariantElement(self, self.carrier.parse(text))

    def format(self, coordinate: Any) -> str:
        return self.carrier.format(coordinate)

    def zero(self) -> "BivariantElement":
        return BivariantElement(self, self.carrier.zero)

    def elements(self) -> list["BivariantElement"]:
        return [BivariantElement(self, c) for c in self.carrier.elements()]

    def sample(self, count: int, seed: int = 0) -> list["BivariantElement"]:
        return [BivariantElement(self, c) for c in self.carrier.sample(count, seed)]

    def summary(self) -> BivariantSummary:
        if self.kind is BivariantKind.FINITE:
            assert isinstance(self.carrier, FiniteQSemigroup)
            return BivariantSummary(
                source=self.source.name,
                target=self.target.name,
                kind=self.kind,
                carrier=self.carrier.name,
                elements=list(self.carrier.labels),
                structure=self.carrier.to_structure(),
                citation=self.citation,
            )
        return BivariantSummary(
            source=self.source.name,
            target=self.target.name,
            kind=self.kind,
            carrier=self.carrier.name,
            citation=self.citation,
        )


@dataclass(frozen=True, eq=False)
class BivariantElement:
    """An element of [[S,T]] given by its coordinate in the realising carrier."""

    space: BivariantSemigroup
    coordinate: Any

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariantElement):
            return NotImplemented
        return self.space.name == other.space.name and self.space.carrier.eq(self.coordinate, other.coordinate)

    def __hash__(self) -> int:
        return hash((self.space.name, self.space.carrier.format(self.coordinate)))

    def __add__(self, other: "BivariantElement") -> "BivariantElement":
        _require_space(self, other.space)
        return BivariantElement(self.space, self.space.carrier.add(self.coordinate, other.coordinate))

    def __le__(self, other: "BivariantElement") -> bool:
        _require_space(self, other.space)
        return self.space.carrier.leq(self.coordinate, other.coordinate)

    def waybelow(self, other: "BivariantElement") -> bool:
        _require_space(self, other.space)
        return self.space.carrier.waybelow(self.coordinate, other.coordinate)

    @property
    def is_compact(self) -> bool:
        return self.space.carrier.is_compact(self.coordinate)

    def format(self) -> str:
        return f"{self.space.source.name}->{self.space.target.name}:{self.space.format(self.coordinate)}"

    def __repr__(self) -> str:
        return f"BivariantElement({self.format()})"


def _require_space(x: BivariantElement, space: BivariantSemigroup) -> None:
    if x.space.name != space.name:
        raise PreconditionError(f"{x.format()} is not an element of {space.name}")


def _finite_space(s: Carrier, t: Carrier, settings: LabSettings | None) -> BivariantSemigroup:
    hom = hom_monoid_finite(s, t, settings)
    tau = tau_finite(hom.semigroup)
    cu = tau.cu.as_cu(f"[[{hom.source.name},{hom.target.name}]]")
    lookup = {table: i for i, table in enumerate(hom.tables)}
    slot = {h: k for k, h in enumerate(tau.endpoint)}

    def sigma(coordinate: int) -> GenMorphism:
        return hom.morphism(tau.endpoint[coordinate])

    def coordinate_of(phi: GenMorphism) -> int:
        table = tuple(phi.apply(a) for a in hom.source.elements())
        if table not in lookup:
            raise PreconditionError(f"{phi!r} is not a generalized Cu-morphism")
        h = lookup[table]
        if h not in slot:
            raise PreconditionError(f"{phi!r} is not self-related in Cu[S,T]")
        return slot[h]

    return BivariantSemigroup(
        source=hom.source,
        target=hom.target,
        carrier=cu,
        kind=BivariantKind.FINITE,
        sigma_rule=sigma,
        coordinate_rule=coordinate_of,
        citation="tau of the finite hom Q-semigroup",
        hom=hom,
    )


def _is_pbar(carrier: Carrier) -> bool:
    return isinstance(carrier, ExtendedRationals) and carrier.mode == "waybelow"


def _require_cu(carrier: Carrier) -> None:
    if isinstance(carrier, ExtendedRationals) and carrier.mode != "waybelow":
        raise PreconditionError(f"{carrier.name} is a Q-semigroup, not a Cu-semigroup")
    if isinstance(carrier, FiniteQSemigroup) and not carrier.is_cu:
        raise PreconditionError(f"{carrier.name} is a Q-semigroup, not a Cu-semigroup")


def _multiple_rule(target: Carrier) -> Callable[[Any, Any], Any]:
    def rule(x: Any, n: Any) -> Any:
        return target.sup_multiple(x) if is_inf(n) else target.multiple(int(n), x)

    return rule


def _soft_or_zero(carrier: Carrier, value: Any) -> Any:
    return carrier.zero if value == 0 else Soft(value)


def _compact_unless_infinite(value: Any) -> Compact | Soft:
    return Soft(INF) if is_inf(value) else Compact(value)


def _dilation_factor(phi: GenMorphism) -> Any:
    # phi(a) = t*a capped at 1; a small enough a reveals t
    for k in range(1, 65):
        a = Fraction(1, 2**k)
        image = phi.apply(a)
        if not is_inf(image):
            return image * 2**k
    return INF


def _closed_form(s: Carrier, t: Carrier) -> BivariantSemigroup:
    """Dispatch an infinite pair onto the closed-form table."""
    _require_cu(s)
    _require_cu(t)

    def build(carrier: Carrier, sigma, coordinate_of, citation: str) -> BivariantSemigroup:
        return BivariantSemigroup(s, t, carrier, BivariantKind.CLOSED, sigma, coordinate_of, citation)

    if isinstance(s, ExtendedNaturals):
        rule = _multiple_rule(t)
        return build(
            t,
            lambda x: ScalarMul(s, t, t, x, rule),
            lambda phi: phi.apply(1),
            "iota: [[Nbar,S]] = S, x -> (n -> n*x)",
        )

    if isinstance(s, NbarPower) and isinstance(t, NbarPower | ExtendedNaturals):
        # Nbar is Nbar^1 here: [[Nbar^k,Nbar]] = Mat[1,k]
        k, l = s.k, (t.k if isinstance(t, NbarPower) else 1)

        def matrix_of(phi: GenMorphism) -> Matrix:
            images = [phi.apply(tuple(1 if i == j else 0 for i in range(k))) for j in range(k)]
            columns = [image if isinstance(image, tuple) else (image,) for image in images]
            return tuple(tuple(columns[j][i] for j in range(k)) for i in range(l))

        return build(
            NbarMatrices(l, k),
            lambda a: MatrixMap(s, t, a),
            matrix_of,
            "[[Nbar^k,Nbar^l]] = Mat[l,k](Nbar), additivity in both variables",
        )

    if _is_pbar(s) and _is_pbar(t):
        m1 = FactorSemigroup(False)
        return build(
            m1,
            lambda x: ScalarMul(s, t, m1, x, lambda factor, a: ext_mul(factor.value, a)),
            lambda phi: _compact_unless_infinite(phi.apply(Fraction(1))),
            "[[Pbar,Pbar]] = M1: constant paths are compact, scaled paths soft",
        )

    if isinstance(s, UHFSemigroup) and isinstance(t, UHFSemigroup):
        if t.includes(s):
            return build(
                t,
                lambda x: ScalarMul(s, t, t, x, t.mul),
                lambda phi: phi.apply(Compact(Fraction(1))),
                "[[R_p,R_q]] = R_q when p divides q",
            )
        pbar = ExtendedRationals("waybelow")
        return build(
            pbar,
            lambda v: ScalarMul(s, t, pbar, v, lambda factor, a: _soft_or_zero(t, ext_mul(factor, a.value))),
            lambda phi: phi.apply(Compact(Fraction(1))).value,
            "[[R_p,R_q]] = Pbar when p does not divide q; Cu(R_p,R_q) = {0}",
        )

    if isinstance(s, UHFSemigroup) and _is_pbar(t):
        return build(
            t,
            lambda v: ScalarMul(s, t, t, v, lambda factor, a: ext_mul(factor, a.value)),
            lambda phi: phi.apply(Compact(Fraction(1))),
            "[[R_q,Pbar]] = Pbar",
        )

    if _is_pbar(s) and isinstance(t, UHFSemigroup):
        m1 = FactorSemigroup(False)
        return build(
            m1,
            lambda x: ScalarMul(s, t, m1, x, lambda factor, a: _soft_or_zero(t, ext_mul(factor.value, a))),
            lambda phi: _compact_unless_infinite(phi.apply(Fraction(1)).value),
            "[[Pbar,R_q]] = M1",
        )

    if isinstance(s, TruncatedInterval) and isinstance(t, TruncatedInterval):
        hex_carrier = catalog("Hex")

        def dilation_coordinate(phi: GenMorphism) -> Compact:
            factor = _dilation_factor(phi)
            if factor != 0 and not is_inf(factor) and factor < 1:
                raise PreconditionError(f"dilation by {factor} is not additive on Sex")
            return Compact(factor)

        return build(
            hex_carrier,
            lambda x: ScalarMul(s, t, hex_carrier, x, lambda factor, a: t.dilate(factor.value, a)),
            dilation_coordinate,
            "[[Sex,Sex]] = Hex: dilations by {0} u [1,inf]",
        )

    if isinstance(s, FactorSemigroup) and isinstance(t, FactorSemigroup) and not s.compact_infinity and not t.compact_infinity:
        return build(
            t,
            lambda x: ScalarMul(s, t, t, x, t.mul),
            lambda phi: phi.apply(Compact(Fraction(1))),
            "[[M1,M1]] = M1 (pi is an isomorphism)",
        )

    raise NoClosedFormError(f"No closed form for [[{s.name},{t.name}]]; known pairs are listed in `catalog list`")


def bivariant(s: Carrier, t: Carrier, settings: LabSettings | None = None) -> BivariantSemigroup:
    """
    The bivariant Cu-semigroup [[S,T]].

    Args:
        s: Source carrier
        t: Target carrier

    Returns:
        Finite pairs: tau of the hom Q-semigroup (every element compact).
        Closed-form pairs: the realising carrier with sigma/coordinate maps.

    Raises:
        NoClosedFormError: For infinite pairs outside the table
        BoundExceededError: If the finite enumeration exceeds the bound
    """
    if s.is_finite and t.is_finite:
        return _finite_space(s, t, settings)
    # a finite side of a closed form is tabulated so coordinates are indices
    return _closed_form(_as_finite_cu(s) if s.is_finite else s, _as_finite_cu(t) if t.is_finite else t)


def bivariant_by_name(source: str, target: str, settings: LabSettings | None = None) -> BivariantSemigroup:
    return bivariant(catalog(source), catalog(target), settings)


def parse_element(text: str, resolve: Callable[[str], Carrier] = catalog) -> BivariantElement:
    """
    Parse "S->T:coordinate".

    Raises:
        StructureError: On malformed syntax
    """
    head, colon, coordinate = text.partition(":")
    source, arrow, target = head.partition("->")
    if not (colon and arrow and source.strip() and target.strip() and coordinate.strip()):
        raise StructureError(f"bivariant elements look like S->T:coordinate, got {text!r}")
    space = bivariant(resolve(source.strip()), resolve(target.strip()))
    return space.parse(coordinate)


# ---------------------------------------------------------------------------
# Endpoint map, evaluation, products
# ---------------------------------------------------------------------------


def sigma_endpoint(x: BivariantElement) -> GenMorphism:
    """The pointwise supremum of a representing path: a generalized Cu-morphism."""
    return x.space.sigma(x.coordinate)


def evaluate(x: BivariantElement, s: Any) -> Any:
    """
    The counit: sigma(x) applied to s.

    Args:
        s: An element of the source, or its text form
    """
    if isinstance(s, str):
        s = x.space.source.parse(s)
    return sigma_endpoint(x).apply(s)


def _compact_coordinate(x: BivariantElement) -> bool:
    return x.space.carrier.is_compact(x.coordinate)


def compose(
    y: BivariantElement, x: BivariantElement, settings: LabSettings | None = None
) -> BivariantElement:
    """
    The composition product y o x in [[S,P]] for x in [[S,T]], y in [[T,P]].

    Rules, first match wins:
        1. x in [[Nbar,T]]: the iota coordinate of y applied to x
        2. powers of Nbar: matrix product
        3. one carrier with a product throughout: its multiplication
        4. otherwise decode sigma(y) o sigma(x) through [[S,P]]; a compact
           coordinate is softened when either factor is soft

    Raises:
        PreconditionError: If the middle carriers differ
        NoClosedFormError: If [[S,P]] has no closed form
    """
    if not x.space.target.same_as(y.space.source):
        raise PreconditionError(
            f"cannot compose {y.space.name} after {x.space.name}: middle carriers differ"
        )
    result = bivariant(x.space.source, y.space.target, settings)
    carriers = (x.space.carrier, y.space.carrier, result.carrier)

    if isinstance(x.space.source, ExtendedNaturals):
        return result.element(evaluate(y, x.coordinate))

    if all(isinstance(c, NbarMatrices) for c in carriers):
        return result.element(mat_mul(y.coordinate, x.coordinate))

    if (
        result.kind is BivariantKind.CLOSED
        and all(c.same_as(result.carrier) for c in carriers)
        and result.carrier.has_product
    ):
        return result.element(result.carrier.mul(y.coordinate, x.coordinate))

    composite = ComposedForm(x.space.source, y.space.target, (sigma_endpoint(x), sigma_endpoint(y)))
    coordinate = result.coordinate_of(composite)
    if isinstance(result.carrier, CompactSoftCarrier) and isinstance(coordinate, Compact):
        if not (_compact_coordinate(x) and _compact_coordinate(y)):
            coordinate = result.carrier.soften(coordinate)
    return result.element(coordinate)


def identity_element(s: Carrier, settings: LabSettings | None = None) -> BivariantElement:
    """id_S as an element of [[S,S]]."""
    space = bivariant(s, s, settings)
    return space.element(space.coordinate_of(identity_map(space.source)))


def iota(s: Carrier, element: Any) -> BivariantElement:
    """
    S -> [[Nbar,S]]: the class of the path of maps 1 -> s_l.

    `element` is text or a coordinate of [[Nbar,S]] (an index when S is finite).
    """
    space = bivariant(ExtendedNaturals(), s)
    if isinstance(element, str):
        element = space.carrier.parse(element)
    return space.element(element)


def iota_inv(x: BivariantElement) -> Any:
    """ev_1 o sigma on [[Nbar,S]]."""
    if not isinstance(x.space.source, ExtendedNaturals):
        raise PreconditionError(f"iota_inv needs an element of [[Nbar,S]], got {x.space.name}")
    return evaluate(x, 1)


def _as_matrix(x: BivariantElement) -> Matrix | None:
    source, coordinate = x.space.source, x.coordinate
    target = x.space.target
    if isinstance(source, NbarPower) and isinstance(target, NbarPower | ExtendedNaturals):
        return coordinate
    if isinstance(source, ExtendedNaturals) and isinstance(target, NbarPower):
        return tuple((v,) for v in coordinate)
    return None


def _from_matrix(space: BivariantSemigroup, matrix: Matrix) -> BivariantElement:
    if isinstance(space.source, ExtendedNaturals):
        return space.element(tuple(row[0] for row in matrix))
    return space.element(matrix)


def external_tensor(
    x1: BivariantElement, x2: BivariantElement, settings: LabSettings | None = None
) -> BivariantElement:
    """
    x1 (x) x2 in [[S1 (x) S2, T1 (x) T2]].

    Rules:
        - a factor in [[Nbar,Nbar]] = Nbar acts as a multiple of the other
        - powers of Nbar: the Kronecker product
        - UHF factors with UHF spaces: the product in R_pq

    Raises:
        NoClosedFormError: If a tensor product or the result space has no closed form
    """
    for unit_side, other in ((x1, x2), (x2, x1)):
        space = unit_side.space
        if isinstance(space.source, ExtendedNaturals) and isinstance(space.target, ExtendedNaturals):
            n = unit_side.coordinate
            carrier = other.space.carrier
            value = carrier.sup_multiple(other.coordinate) if is_inf(n) else carrier.multiple(int(n), other.coordinate)
            return other.space.element(value)

    source = tensor_carrier(x1.space.source, x2.space.source)
    target = tensor_carrier(x1.space.target, x2.space.target)
    result = bivariant(source, target, settings)

    a, b = _as_matrix(x1), _as_matrix(x2)
    if a is not None and b is not None:
        return _from_matrix(result, kronecker(a, b))

    if all(isinstance(x.space.carrier, UHFSemigroup) for x in (x1, x2)) and isinstance(result.carrier, UHFSemigroup):
        return result.element(result.carrier.make(result.carrier.mul(x1.coordinate, x2.coordinate)))

    raise NoClosedFormError(f"No closed form for the external tensor of {x1.space.name} and {x2.space.name}")


def unit_map(s: Carrier, t: Carrier, element: Any, settings: LabSettings | None = None) -> BivariantElement:
    """
    u_{S,T}(s) = [(s_l (x) -)] in [[T, S (x) T]].

    Available when S or T is Nbar, or both are powers of Nbar.

    Raises:
        NoClosedFormError: Elsewhere
    """
    if isinstance(element, str):
        element = s.parse(element)
    if isinstance(t, ExtendedNaturals):
        return iota(s, element)
    if isinstance(s, ExtendedNaturals):
        space = bivariant(t, t, settings)
        return space.element(space.coordinate_of(ScalarMul(space.source, space.target, s, element, _flip(_multiple_rule(space.target)))))
    if isinstance(s, NbarPower) and isinstance(t, NbarPower):
        space = bivariant(t, NbarPower(s.k * t.k), settings)
        column = tuple((v,) for v in element)
        return space.element(kronecker(column, identity_matrix(t.k)))
    raise NoClosedFormError(f"No unit map u_{{{s.name},{t.name}}}: {s.name} (x) {t.name} is not resolved")


def _flip(rule: Callable[[Any, Any], Any]) -> Callable[[Any, Any], Any]:
    return lambda n, x: rule(x, n)


def general_product(
    x: BivariantElement, y: BivariantElement, middle: Carrier, settings: LabSettings | None = None
) -> BivariantElement:
    """
    The general product over `middle`, for its two supported specialisations.

        middle = Nbar                  the external tensor product x (x) y
        S1 = T2 = Nbar (x: [[P,T1]],   the composition x o y
                        y: [[S2,P]])

    Raises:
        NoClosedFormError: For every other shape
    """
    if isinstance(middle, ExtendedNaturals):
        return external_tensor(x, y, settings)
    if x.space.source.same_as(middle) and y.space.target.same_as(middle):
        return compose(x, y, settings)
    raise NoClosedFormError(
        f"The general product over {middle.name} is only available for middle = Nbar or as a composition"
    )


def compact_morphisms(s: Carrier, t: Carrier, settings: LabSettings | None = None) -> CompactMorphismReport:
    """
    Cu(S,T) as the compact elements of [[S,T]].

    Exhaustive for finite pairs and for carriers whose only compact element
    is 0 (Pbar); sampled otherwise.
    """
    space = bivariant(s, t, settings)
    carrier = space.carrier
    exhaustive = carrier.is_finite or _is_pbar(carrier)
    if exhaustive:
        candidates = carrier.elements() if carrier.is_finite else [carrier.zero]
    else:
        seed = (settings or LabSettings()).sample_seed
        candidates = carrier.sample(MAP_SAMPLES, seed)
    return CompactMorphismReport(
        source=space.source.name,
        target=space.target.name,
        exhaustive=exhaustive,
        elements=[carrier.format(c) for c in candidates if carrier.is_compact(c)],
    )


def noncommutativity_witness(k: int) -> tuple[BivariantElement, BivariantElement, BivariantElement, BivariantElement]:
    """
    (A, B, A o B, B o A) in [[Nbar^k,Nbar^k]] with A o B != B o A.

    Raises:
        PreconditionError: For k < 2 (Nbar^1 is commutative)
    """
    if k < 2:
        raise PreconditionError(f"[[Nbar^{k},Nbar^{k}]] is commutative; a witness needs k >= 2")
    power = NbarPower(k)
    space = bivariant(power, power)

    def unit(i: int, j: int) -> Matrix:
        return tuple(tuple(1 if (r, c) == (i, j) else 0 for c in range(k)) for r in range(k))

    a, b = space.element(unit(0, 1)), space.element(unit(1, 0))
    return a, b, compose(a, b), compose(b, a)


# ---------------------------------------------------------------------------
# Semiring maps and actions
# ---------------------------------------------------------------------------


def _semiring(r: Carrier) -> None:
    if not r.has_product:
        raise PreconditionError(f"{r.name} is not a Cu-semiring")


def _through_labels(t: FiniteQSemigroup, values: Carrier, rule: Callable[[Any, Any], Any]) -> Callable[[Any, Any], int]:
    """Lift a rule on catalog values to the indices of a tabulated carrier."""

    def lifted(factor: Any, a: int) -> int:
        return t.index(values.format(rule(factor, values.parse(t.label(a)))))

    return lifted


def _multiplication_element(
    space: BivariantSemigroup,
    r: Carrier,
    element: Any,
    rule: Callable[[Any, Any], Any],
    native: bool,
) -> BivariantElement:
    """
    The class of the path (r_l * -) in [[T,T]]: soft unless r is compact.

    `native` rules act on the space's own elements; the others act on the
    catalog values of r and are lifted through labels on finite spaces.
    """
    if space.kind is BivariantKind.FINITE and not native:
        assert isinstance(space.target, FiniteQSemigroup)
        rule = _through_labels(space.target, r, rule)
    coordinate = space.coordinate_of(ScalarMul(space.source, space.target, r, element, rule))
    if isinstance(space.carrier, CompactSoftCarrier) and not r.is_compact(element):
        coordinate = space.carrier.soften(coordinate)
    return space.element(coordinate)


def pi_r(r: Carrier, element: Any, settings: LabSettings | None = None) -> BivariantElement:
    """
    pi_R : R -> [[R,R]], r -> [(r_l * -)].

    Args:
        r: A catalog Cu-semiring
        element: An element of r (catalog value or text)

    Raises:
        PreconditionError: If R has no product
        NoClosedFormError: If [[R,R]] is not supported
    """
    _semiring(r)
    if isinstance(element, str):
        element = r.parse(element)
    space = bivariant(r, r, settings)
    return _multiplication_element(space, r, element, r.mul, native=False)


def eps_r(r: Carrier, x: BivariantElement) -> Any:
    """
    eps_R : [[R,R]] -> R, [f] -> sup f_l(1), returned as a catalog value of r.
    """
    _semiring(r)
    if x.space.source.name != r.name or x.space.target.name != r.name:
        raise PreconditionError(f"eps_{r.name} needs an element of [[{r.name},{r.name}]], got {x.space.name}")
    source = x.space.source
    if isinstance(source, FiniteQSemigroup):
        image = evaluate(x, source.index(r.format(r.unit)))
        return r.parse(source.label(image))
    return evaluate(x, r.unit)


def action_rule(r: Carrier, t: Carrier) -> tuple[Callable[[Any, Any], Any], bool]:
    """
    How R acts on T, and whether the rule acts on T's own elements.

    Nbar acts by multiples, R on itself by its product, and R_p on R_q
    (p | q) by the product in R_q.

    Raises:
        PreconditionError: If T is not a known R-semimodule
    """
    if isinstance(r, ExtendedNaturals):
        return _flip(_multiple_rule(t)), True
    if r.name == t.name and r.has_product:
        return r.mul, False
    if isinstance(r, UHFSemigroup) and isinstance(t, UHFSemigroup) and t.includes(r):
        return t.mul, True
    raise PreconditionError(f"{t.name} is not a known {r.name}-semimodule")


def left_action(
    r: Carrier, element: Any, x: BivariantElement, settings: LabSettings | None = None
) -> BivariantElement:
    """
    r[f] = [(r_l f_l)], computed as (r_l * -) o x.

    Raises:
        PreconditionError: If R's unit is not compact or T is not an R-semimodule
    """
    _semiring(r)
    if not r.is_compact(r.unit):
        raise PreconditionError(f"the unit of {r.name} is not compact; the action is not unital")
    if isinstance(element, str):
        element = r.parse(element)
    t = x.space.target
    rule, native = action_rule(r, t)
    multiplier = _multiplication_element(bivariant(t, t, settings), r, element, rule, native)
    return compose(multiplier, x, settings)


def right_action(x: BivariantElement, r: BivariantElement, settings: LabSettings | None = None) -> BivariantElement:
    """x r = x o r for r in [[S,S]]."""
    return compose(x, r, settings)


def sample_elements(space: BivariantSemigroup, count: int, seed: int = 0) -> list[BivariantElement]:
    """Every element of a finite space (up to count), a deterministic sample otherwise."""
    if space.carrier.is_finite:
        return space.elements()[: max(count, 1)]
    return space.sample(count, seed)


__all__ = [
    "MAP_SAMPLES",
    "GenMorphism",
    "FiniteTable",
    "ScalarMul",
    "MatrixMap",
    "ComposedForm",
    "ZeroMap",
    "SummedMap",
    "HomMonoid",
    "BivariantSemigroup",
    "BivariantElement",
    "identity_map",
    "add_maps",
    "hom_monoid_finite",
    "bivariant",
    "bivariant_by_name",
    "parse_element",
    "sigma_endpoint",
    "evaluate",
    "compose",
    "identity_element",
    "iota",
    "iota_inv",
    "external_tensor",
    "unit_map",
    "general_product",
    "compact_morphisms",
    "noncommutativity_witness",
    "pi_r",
    "eps_r",
    "action_rule",
    "left_action",
    "right_action",
    "sample_elements",
]
