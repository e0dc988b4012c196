"""
Core Order Calculator for cuntzlab

This module holds the foundational types for positively ordered monoids and
auxiliary relations, the carrier interface every concrete semigroup
implements, and the law and axiom checkers.

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (structure_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
A positively ordered monoid (pom) is a commutative monoid with a partial
order that is compatible with addition and has 0 as its least element.
An auxiliary relation refines the order and is additive. On a finite pom
the way-below relation collapses to the order itself: an increasing
sequence in a finite poset is eventually constant, so its supremum is
attained and a << b iff a <= b.

CHECKS IMPLEMENTED:
1. validate_pom - monoid laws, partial order laws, compatibility, positivity
2. validate_aux - the four auxiliary-relation laws
3. check_o5 - almost algebraic order, exhaustive over quintuples
4. check_o6 - almost Riesz decomposition, exhaustive over quadruples

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from typing import Any

import numpy as np

from src.algebra.errors import BoundExceededError, StructureError, UnsupportedOperationError
from src.models.settings_inputs import LabSettings
from src.models.structure_inputs import (
    AxiomReport,
    AxiomViolation,
    LawViolation,
    StructureCheck,
    StructureFile,
    ValidationReport,
)


class Carrier(ABC):
    """
    The effective semigroup interface every carrier implements.

    WHAT: Exact equality, order, addition, way-below and element I/O
    WHY: Paths, bivariant closed forms and the CLI work against this
         contract, whether the carrier is a finite table or a closed form
    HOW: Subclasses supply leq/add/waybelow/parse/format/sample; compactness
         and bounded softness are derived here

    The Q-structure of a carrier is `aux`. For Cu-semigroups it is the
    way-below relation; Q-semigroups such as (Pbar, <_1) override it.
    """

    name: str = "carrier"
    is_finite: bool = False
    has_product: bool = False
    supports_scaling: bool = False
    # paths over the carrier are decided by (endpoint, attained)
    classifiable: bool = False

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def leq(self, a: Any, b: Any) -> bool: ...

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def waybelow(self, a: Any, b: Any) -> bool: ...

    @abstractmethod
    def parse(self, text: str) -> Any: ...

    @abstractmethod
    def format(self, a: Any) -> str: ...

    @abstractmethod
    def sample(self, count: int, seed: int = 0) -> list[Any]:
        """A deterministic list of at most `count` elements, always including zero."""

    def eq(self, a: Any, b: Any) -> bool:
        return a == b

    def aux(self, a: Any, b: Any) -> bool:
        return self.waybelow(a, b)

    def is_compact(self, a: Any) -> bool:
        return self.waybelow(a, a)

    def is_soft(self, a: Any) -> bool:
        """Softness; finite carriers decide it exactly, closed forms override."""
        return self.bounded_soft(a, self.elements(), LabSettings().softness_k_test)

    def bounded_soft(self, a: Any, candidates: Iterable[Any], k_test: int) -> bool:
        """
        Bounded-verified softness over the given candidates.

        Every candidate a' with a' << a must satisfy (k+1)a' <= ka for some
        k <= k_test.
        """
        return all(
            self.soft_witness(a_prime, a, k_test) is not None
            for a_prime in candidates
            if self.waybelow(a_prime, a)
        )

    def soft_witness(self, a_prime: Any, a: Any, k_test: int) -> int | None:
        """Smallest k <= k_test with (k+1)a' <= ka, or None."""
        multiple_a = self.zero
        multiple_a_prime = a_prime
        for k in range(1, k_test + 1):
            multiple_a = self.add(multiple_a, a)
            multiple_a_prime = self.add(multiple_a_prime, a_prime)
            if self.leq(multiple_a_prime, multiple_a):
                return k
        return None

    def multiple(self, k: int, a: Any) -> Any:
        """k*a by doubling."""
        result, power = self.zero, a
        while k:
            if k & 1:
                result = self.add(result, power)
            power = self.add(power, power)
            k >>= 1
        return result

    def total(self, values: Iterable[Any]) -> Any:
        result = self.zero
        for value in values:
            result = self.add(result, value)
        return result

    def sup_multiple(self, a: Any) -> Any:
        """sup_n n*a; finite carriers reach it once the multiples stop growing."""
        if not self.is_finite:
            raise UnsupportedOperationError(f"{self.name} does not define infinite multiples")
        current = a
        while True:
            doubled = self.add(current, current)
            if self.eq(doubled, current):
                return current
            current = doubled

    def same_as(self, other: "Carrier") -> bool:
        return self is other or (type(self) is type(other) and self.name == other.name)

    def dominates_below(self, endpoint: Any, attained: bool, c: Any) -> bool:
        """
        Whether every value of a path with the given endpoint is < c.

        Attained endpoints reduce to endpoint < c. Carriers that classify
        non-attained paths override the other branch.
        """
        if attained:
            return self.aux(endpoint, c)
        raise UnsupportedOperationError(f"{self.name} cannot classify non-attained paths")

    def interpolate_between(self, low: Any, other: Any, high: Any) -> Any:
        """An element c with low < c, other < c and c < high."""
        raise UnsupportedOperationError(f"{self.name} has no interpolation oracle")

    def elements(self) -> list[Any]:
        raise UnsupportedOperationError(f"{self.name} is infinite; it has no element list")

    def mul(self, a: Any, b: Any) -> Any:
        raise UnsupportedOperationError(f"{self.name} has no product")

    @property
    def unit(self) -> Any:
        raise UnsupportedOperationError(f"{self.name} has no product")

    def scale(self, lam: Any, a: Any) -> Any:
        raise UnsupportedOperationError(f"{self.name} does not support scaling by path indices")

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name!r})"


class Pom(Carrier):
    """
    A finite positively ordered monoid stored as tables.

    WHAT: Labels, a zero, an addition table and an order table
    WHY: The generic substrate for finite enumeration
    HOW: Elements are table indices 0..n-1; labels are used for I/O and
         witnesses. Construction checks only the STRUCTURE of the tables;
         the laws are checked by validate_pom.

    USAGE EXAMPLE:
        e1 = Pom("E1", ["0", "1", "inf"], "0",
                 add=[[0, 1, 2], [1, 2, 2], [2, 2, 2]],
                 leq=[[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        e1.add(1, 1)   # -> 2, i.e. "inf"
    """

    is_finite = True

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        zero: str,
        add: Sequence[Sequence[int]] | np.ndarray,
        leq: Sequence[Sequence[int]] | np.ndarray,
    ):
        self.name = name
        self.labels: tuple[str, ...] = tuple(labels)
        n = len(self.labels)
        if n == 0:
            raise StructureError("A pom needs at least one element.")
        if len(set(self.labels)) != n:
            raise StructureError(f"{name}: element labels must be unique.")
        if zero not in self.labels:
            raise StructureError(f"{name}: zero {zero!r} is not an element label.")
        self.zero_index = self.labels.index(zero)

        add_table = np.asarray(add, dtype=np.int64)
        leq_table = np.asarray(leq)
        if add_table.shape != (n, n):
            raise StructureError(f"{name}: addition table has shape {add_table.shape}, expected ({n}, {n}).")
        if leq_table.shape != (n, n):
            raise StructureError(f"{name}: order table has shape {leq_table.shape}, expected ({n}, {n}).")
        if add_table.min() < 0 or add_table.max() >= n:
            raise StructureError(f"{name}: addition table contains indices outside 0..{n - 1}.")
        if not np.isin(leq_table, (0, 1, True, False)).all():
            raise StructureError(f"{name}: order table entries must be 0 or 1.")

        self.add_table = add_table
        self.leq_table = leq_table.astype(bool)
        self._index = {label: i for i, label in enumerate(self.labels)}
        # plain lists for fast scalar access in enumeration loops
        self._add = add_table.tolist()
        self._leq = self.leq_table.tolist()

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def zero(self) -> int:
        return self.zero_index

    def leq(self, a: int, b: int) -> bool:
        return self._leq[a][b]

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def waybelow(self, a: int, b: int) -> bool:
        # increasing sequences in a finite poset are eventually constant
        return self._leq[a][b]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise StructureError(f"{self.name}: unknown element {label!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def parse(self, text: str) -> int:
        return self.index(text.strip())

    def format(self, a: int) -> str:
        return self.labels[a]

    def elements(self) -> list[int]:
        return list(range(self.size))

    def sample(self, count: int, seed: int = 0) -> list[int]:
        return self.elements()[: max(count, 1)]

    def is_soft(self, a: int) -> bool:
        # exact on a finite carrier: (k+1)a' <= ka stabilises once k exceeds the size
        return self.bounded_soft(a, self.elements(), self.size + 1)

    def labels_of(self, indices: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in indices]

    def same_as(self, other: Carrier) -> bool:
        if self is other:
            return True
        if not isinstance(other, Pom) or self.labels != other.labels or self.zero != other.zero:
            return False
        return bool(
            np.array_equal(self.add_table, other.add_table)
            and np.array_equal(self.leq_table, other.leq_table)
            and np.array_equal(getattr(self, "aux_table", self.leq_table), getattr(other, "aux_table", other.leq_table))
        )

    def interpolate_between(self, low: int, other: int, high: int) -> int:
        for c in sorted(self.elements(), key=lambda x: (int(self.leq_table[:, x].sum()), x)):
            if self.aux(low, c) and self.aux(other, c) and self.aux(c, high):
                return c
        raise UnsupportedOperationError(
            f"{self.name}: no element c with {self.label(low)}, {self.label(other)} < c < {self.label(high)}"
        )


class AuxRelation:
    """A boolean relation table over the elements of a finite pom."""

    def __init__(self, rel: Sequence[Sequence[int]] | np.ndarray):
        self.rel = np.asarray(rel).astype(bool)

    @classmethod
    def from_pom(cls, pom: Pom) -> "AuxRelation":
        return cls(pom.leq_table.copy())

    def __call__(self, a: int, b: int) -> bool:
        return bool(self.rel[a, b])


def sequential_waybelow(pom: Pom) -> np.ndarray:
    """
    Way-below computed from the sequential definition on a finite poset.

    a << b iff every increasing sequence with supremum >= b is eventually
    >= a. Such sequences are eventually constant at some c >= b, so the
    condition reads: a <= c for every c >= b.
    """
    leq = pom.leq_table
    # result[a, b] = all over c of (leq[b, c] -> leq[a, c])
    return ~np.any(leq[None, :, :] & ~leq[:, None, :], axis=2)


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _violation(
    pom: Pom, law: str, mask: np.ndarray, description: str
) -> LawViolation | None:
    witness = _first(mask)
    if witness is None:
        return None
    return LawViolation(
        law=law,
        witness=pom.labels_of(witness),
        occurrences=int(mask.sum()),
        description=description,
    )


def validate_pom(pom: Pom) -> ValidationReport:
    """
    Check every positively-ordered-monoid law on a finite pom.

    Args:
        pom: Table-based monoid (structure already checked on construction)

    Returns:
        ValidationReport with the first witness of each violated law

    EDUCATIONAL NOTE:
    Laws are scanned with numpy broadcasting over index cubes, so a witness
    is the lexicographically first failing index tuple.
    """
    n = pom.size
    add = pom.add_table
    leq = pom.leq_table
    idx = np.arange(n)
    z = pom.zero_index

    assoc_left = add[add[:, :, None], idx[None, None, :]]
    assoc_right = add[idx[:, None, None], add[None, :, :]]

    checks = [
        ("commutativity", add != add.T, "a + b = b + a"),
        ("associativity", assoc_left != assoc_right, "(a + b) + c = a + (b + c)"),
        ("zero_neutral", add[z, :] != idx, "0 + a = a"),
        ("reflexivity", ~np.diag(leq), "a <= a"),
        ("antisymmetry", leq & leq.T & ~np.eye(n, dtype=bool), "a <= b <= a implies a = b"),
        (
            "transitivity",
            leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :],
            "a <= b <= c implies a <= c",
        ),
        (
            "add_compatibility",
            leq[:, :, None] & ~leq[add[:, None, :], add[None, :, :]],
            "a <= b implies a + c <= b + c",
        ),
        ("positivity", ~leq[z, :], "0 <= a"),
    ]

    violations = []
    for law, mask, description in checks:
        violation = _violation(pom, law, mask, description)
        if violation is not None:
            violations.append(violation)

    return ValidationReport(subject=pom.name, checked="pom", carrier_size=n, violations=violations)


def validate_aux(pom: Pom, relation: AuxRelation | np.ndarray) -> ValidationReport:
    """
    Check the four auxiliary-relation laws.

    The laws are: x < y implies x <= y; x' <= x < y <= y' implies x' < y';
    0 < x for all x; x1 < y1 and x2 < y2 imply x1 + x2 < y1 + y2.

    Raises:
        StructureError: If the relation table does not match the carrier size
    """
    rel = relation.rel if isinstance(relation, AuxRelation) else np.asarray(relation).astype(bool)
    n = pom.size
    if rel.shape != (n, n):
        raise StructureError(f"{pom.name}: auxiliary relation has shape {rel.shape}, expected ({n}, {n}).")
    leq = pom.leq_table
    add = pom.add_table
    violations: list[LawViolation] = []

    refines = _violation(pom, "aux_refines_leq", rel & ~leq, "x < y implies x <= y")
    if refines is not None:
        violations.append(refines)

    # x' <= x < y <= y'  ->  x' < y'   (witness reported as x', x, y, y')
    leq_f = leq.astype(np.float64)
    enclosed = (leq_f @ rel.astype(np.float64) @ leq_f) > 0
    outside = enclosed & ~rel
    hit = _first(outside)
    if hit is not None:
        x_prime, y_prime = hit
        x, y = next(
            (x, y)
            for x in range(n)
            for y in range(n)
            if leq[x_prime, x] and rel[x, y] and leq[y, y_prime]
        )
        violations.append(
            LawViolation(
                law="aux_order_compatible",
                witness=pom.labels_of((x_prime, x, y, y_prime)),
                occurrences=int(outside.sum()),
                description="x' <= x < y <= y' implies x' < y'",
            )
        )

    zero = _violation(pom, "zero_aux", ~rel[pom.zero_index, :], "0 < x fails")
    if zero is not None:
        violations.append(zero)

    pairs = np.argwhere(rel)
    first_witness: list[int] | None = None
    failures = 0
    for x1, y1 in pairs:
        bad = ~rel[add[x1, pairs[:, 0]], add[y1, pairs[:, 1]]]
        count = int(bad.sum())
        if count and first_witness is None:
            q = int(np.argmax(bad))
            first_witness = [int(x1), int(y1), int(pairs[q, 0]), int(pairs[q, 1])]
        failures += count
    if first_witness is not None:
        violations.append(
            LawViolation(
                law="aux_additive",
                witness=pom.labels_of(first_witness),
                occurrences=failures,
                description="x1 < y1 and x2 < y2 imply x1 + x2 < y1 + y2",
            )
        )

    return ValidationReport(subject=pom.name, checked="aux", carrier_size=n, violations=violations)


def validate_structure(structure: StructureFile) -> StructureCheck:
    """
    Both law families for a structure file, without building a FiniteQSemigroup.

    Raises:
        StructureError: If the tables are structurally malformed
    """
    pom = Pom(structure.name, structure.elements, structure.zero, structure.add, structure.leq)
    rel = pom.leq_table if structure.aux is None else np.asarray(structure.aux).astype(bool)
    return StructureCheck(
        subject=structure.name,
        pom=validate_pom(pom),
        aux=validate_aux(pom, rel),
        is_cu=bool(np.array_equal(rel, pom.leq_table)),
    )


class AxiomChecker:
    """
    Exhaustive O5/O6 scanner for finite carriers.

    WHAT: Lists every tuple violating almost algebraic order (O5) or almost
          Riesz decomposition (O6)
    WHY: These axioms need not pass to bivariant semigroups; finite scans
         find concrete counterexamples
    HOW: Tables are pulled into numpy arrays and the existential quantifier
         is evaluated by boolean matrix products

    USAGE EXAMPLE:
        checker = AxiomChecker(LabSettings())
        report = checker.check_o5(sub_e3)
        report.witnesses()   # [("2", "2", "0", "0", "3")]
    """

    def __init__(self, settings: LabSettings | None = None):
        self.settings = settings or LabSettings()

    def _tables(self, s: Carrier) -> tuple[list[Any], np.ndarray, np.ndarray, np.ndarray]:
        elements = s.elements()
        n = len(elements)
        if n > self.settings.axiom_carrier_limit:
            raise BoundExceededError(
                f"axiom tuples on {s.name} ({n} elements)",
                n**5,
                self.settings.axiom_carrier_limit**5,
            )
        position = {i: e for i, e in enumerate(elements)}
        lookup = {self._key(e): i for i, e in position.items()}
        add = np.array(
            [[lookup[self._key(s.add(a, b))] for b in elements] for a in elements], dtype=np.int64
        ).reshape(n, n)
        leq = np.array([[s.leq(a, b) for b in elements] for a in elements], dtype=bool).reshape(n, n)
        way = np.array([[s.waybelow(a, b) for b in elements] for a in elements], dtype=bool).reshape(n, n)
        return elements, add, leq, way

    @staticmethod
    def _key(element: Any) -> Any:
        return element

    def check_o5(self, s: Carrier) -> AxiomReport:
        """
        Scan O5: for a' << a, b' << b and a + b <= c there is x with
        a' + x <= c <= a + x and b' <= x.
        """
        elements, add, leq, way = self._tables(s)
        n = len(elements)
        # fits[a', a, c, x]: a' + x <= c <= a + x
        fits = leq[add[:, None, None, :], np.arange(n)[None, None, :, None]] & leq[
            np.arange(n)[None, None, :, None], add[None, :, None, :]
        ]
        # covered[a', a, c, b']: some fitting x lies above b'
        covered = (fits.reshape(n**3, n).astype(np.float64) @ leq.T.astype(np.float64)).reshape(n, n, n, n) > 0
        sum_below = leq[add[:, :, None], np.arange(n)[None, None, :]]  # [a, b, c]: a + b <= c
        # admissible[a, c, b']: some b with b' << b and a + b <= c
        admissible = np.einsum("pb,abc->acp", way.astype(np.float64), sum_below.astype(np.float64)) > 0
        failing = ~covered & way[:, :, None, None] & admissible[None, :, :, :]

        violations = []
        for a_prime, a, c, b_prime in np.argwhere(failing):
            for b in range(n):
                if way[b_prime, b] and sum_below[a, b, c]:
                    violations.append((int(a_prime), int(a), int(b_prime), int(b), int(c)))
        violations.sort()
        return AxiomReport(
            subject=s.name,
            axiom="O5",
            carrier_size=n,
            violations=[
                AxiomViolation(axiom="O5", witness=[s.format(elements[i]) for i in v]) for v in violations
            ],
        )

    def check_o6(self, s: Carrier) -> AxiomReport:
        """
        Scan O6: for a' << a <= b + c there are b', c' with a' <= b' + c',
        b' <= a, b and c' <= a, c.
        """
        elements, add, leq, way = self._tables(s)
        n = len(elements)
        below_sum = leq[:, add].astype(np.float64)  # [a', b', c']: a' <= b' + c'
        violations = []
        for a in range(n):
            # candidates below a and below a given b (or c)
            below = (leq[:, a][:, None] & leq).astype(np.float64)  # [b', b]
            # reach[a', b', c] = some c' <= a, c with a' <= b' + c'
            reach = (below_sum.reshape(n * n, n) @ below).reshape(n, n, n) > 0
            # good[a', b, c] = some b' <= a, b with reach[a', b', c]
            good = np.einsum("pb,xpc->xbc", below, reach.astype(np.float64)) > 0
            failing = way[:, a][:, None, None] & leq[a, add][None, :, :] & ~good
            for a_prime, b, c in np.argwhere(failing):
                violations.append((int(a_prime), a, int(b), int(c)))
        violations.sort()
        return AxiomReport(
            subject=s.name,
            axiom="O6",
            carrier_size=n,
            violations=[
                AxiomViolation(axiom="O6", witness=[s.format(elements[i]) for i in v]) for v in violations
            ],
        )


def check_o5(s: Carrier, settings: LabSettings | None = None) -> AxiomReport:
    """Convenience wrapper around AxiomChecker.check_o5."""
    return AxiomChecker(settings).check_o5(s)


def check_o6(s: Carrier, settings: LabSettings | None = None) -> AxiomReport:
    """Convenience wrapper around AxiomChecker.check_o6."""
    return AxiomChecker(settings).check_o6(s)
