"""
Finite Q-Semigroup Calculator for cuntzlab

Exact computation on finite Q-semigroups: the tau construction, ideals,
quotients, morphism enumeration and the coreflection certificate.

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (finite_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
A path in a finite Q-semigroup is increasing for the auxiliary relation,
so it is eventually constant at some a with a < a. Two paths are
equivalent iff their eventual values agree, hence

    tau(S) = {a in S : a < a},  ordered by the auxiliary relation,

with [a] << [b] iff a < b, and the endpoint map is the inclusion. The
paths module cross-checks this against brute-force step paths.

An ideal J of a finite Cu-semigroup has a largest element z_J (the sum of
its members), which is idempotent, and J is the down-set of z_J. The
quotient identifies a and b when a <= b + z_J and b <= a + z_J; the class
of a is represented by a + z_J.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np

from src.algebra.core_order import AuxRelation, Carrier, Pom, validate_aux, validate_pom
from src.algebra.errors import BoundExceededError, PreconditionError, StructureError
from src.models.finite_inputs import (
    CoreflectionReport,
    IdealSummary,
    QuotientSummary,
    TauSummary,
)
from src.models.settings_inputs import LabSettings
from src.models.structure_inputs import StructureFile

MorphismTable = tuple[int, ...]


class FiniteQSemigroup(Pom):
    """
    A finite pom with an additive auxiliary relation.

    WHAT: The generic computation substrate of the finite engine
    WHY: Finite Cu-semigroups are the case aux == leq; everything else
         (tau, hom semigroups, quotients) produces or consumes this type
    HOW: Tables are validated on construction unless validate=False

    USAGE EXAMPLE:
        s = FiniteQSemigroup.from_structure(structure_file)
        tau = tau_finite(s)
        tau.cu.labels      # self-related elements of s
    """

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        zero: str,
        add: Sequence[Sequence[int]] | np.ndarray,
        leq: Sequence[Sequence[int]] | np.ndarray,
        aux: Sequence[Sequence[int]] | np.ndarray | None = None,
        validate: bool = True,
    ):
        super().__init__(name, labels, zero, add, leq)
        self.aux_table = self.leq_table.copy() if aux is None else np.asarray(aux).astype(bool)
        if self.aux_table.shape != self.leq_table.shape:
            raise StructureError(
                f"{name}: auxiliary relation has shape {self.aux_table.shape}, expected {self.leq_table.shape}."
            )
        self._aux = self.aux_table.tolist()
        if validate:
            problems = validate_pom(self).violations + validate_aux(self, self.aux_table).violations
            if problems:
                laws = ", ".join(f"{v.law} at ({', '.join(v.witness)})" for v in problems)
                raise PreconditionError(f"{name} is not a valid Q-semigroup: {laws}")

    def aux(self, a: int, b: int) -> bool:
        return self._aux[a][b]

    @property
    def is_cu(self) -> bool:
        """True iff the auxiliary relation is the order (a finite Cu-semigroup)."""
        return bool(np.array_equal(self.aux_table, self.leq_table))

    def as_cu(self, name: str | None = None) -> "FiniteQSemigroup":
        """The same pom with aux = leq."""
        return FiniteQSemigroup(
            name or self.name, self.labels, self.labels[self.zero_index], self.add_table, self.leq_table, validate=False
        )

    def idempotents(self) -> list[int]:
        return [a for a in self.elements() if self.add(a, a) == a]

    def down_set(self, z: int) -> frozenset[int]:
        return frozenset(a for a in self.elements() if self.leq(a, z))

    @classmethod
    def from_structure(cls, structure: StructureFile) -> "FiniteQSemigroup":
        return cls(
            structure.name, structure.elements, structure.zero, structure.add, structure.leq, structure.aux
        )

    def to_structure(self) -> StructureFile:
        aux = None if self.is_cu else self.aux_table.astype(int).tolist()
        return StructureFile(
            name=self.name,
            elements=list(self.labels),
            zero=self.labels[self.zero_index],
            add=self.add_table.tolist(),
            leq=self.leq_table.astype(int).tolist(),
            aux=aux,
        )

    @classmethod
    def from_carrier(cls, carrier: Carrier, name: str | None = None) -> "FiniteQSemigroup":
        """Tabulate a finite catalog carrier (aux taken from the carrier)."""
        elements = carrier.elements()
        labels = [carrier.format(e) for e in elements]
        position = {label: i for i, label in enumerate(labels)}
        add = [[position[carrier.format(carrier.add(a, b))] for b in elements] for a in elements]
        leq = [[int(carrier.leq(a, b)) for b in elements] for a in elements]
        aux = [[int(carrier.aux(a, b)) for b in elements] for a in elements]
        return cls(name or carrier.name, labels, carrier.format(carrier.zero), add, leq, aux)


@dataclass(frozen=True)
class TauResult:
    """tau(S) together with its endpoint map (an index list into S)."""

    cu: FiniteQSemigroup
    endpoint: tuple[int, ...]


@dataclass(frozen=True)
class Ideal:
    """A downward-hereditary submonoid, with its largest element."""

    members: frozenset[int]
    top: int

    def summary(self, s: Pom) -> IdealSummary:
        return IdealSummary(members=s.labels_of(sorted(self.members)), top=s.label(self.top))


@dataclass(frozen=True)
class QuotientResult:
    """S/J together with the projection (an index list into S/J)."""

    cu: FiniteQSemigroup
    projection: tuple[int, ...]
    ideal: Ideal


def trivial() -> FiniteQSemigroup:
    """The zero Cu-semigroup {0}."""
    return FiniteQSemigroup("{0}", ["0"], "0", [[0]], [[1]])


def direct_sum(s: FiniteQSemigroup, t: FiniteQSemigroup, name: str | None = None) -> FiniteQSemigroup:
    """S (+) T with componentwise operations; labels are '(a,b)'."""
    pairs = [(a, b) for a in s.elements() for b in t.elements()]
    position = {pair: i for i, pair in enumerate(pairs)}
    labels = [f"({s.label(a)},{t.label(b)})" for a, b in pairs]
    add = [[position[(s.add(a, c), t.add(b, d))] for c, d in pairs] for a, b in pairs]
    leq = [[int(s.leq(a, c) and t.leq(b, d)) for c, d in pairs] for a, b in pairs]
    aux = [[int(s.aux(a, c) and t.aux(b, d)) for c, d in pairs] for a, b in pairs]
    return FiniteQSemigroup(
        name or f"{s.name}+{t.name}",
        labels,
        labels[position[(s.zero, t.zero)]],
        add,
        leq,
        aux,
        validate=False,
    )


def capped_chain(size: int, name: str | None = None) -> FiniteQSemigroup:
    """{0, ..., size-1} with addition capped at the top (E_{size-2} with a numeric top)."""
    top = size - 1
    labels = [str(i) for i in range(size)]
    add = [[min(i + j, top) for j in range(size)] for i in range(size)]
    leq = [[int(i <= j) for j in range(size)] for i in range(size)]
    return FiniteQSemigroup(name or f"cap{size}", labels, "0", add, leq)


def max_chain(size: int, name: str | None = None, aux: Sequence[Sequence[int]] | None = None) -> FiniteQSemigroup:
    """{0, ..., size-1} with a + b = max(a, b)."""
    labels = [str(i) for i in range(size)]
    add = [[max(i, j) for j in range(size)] for i in range(size)]
    leq = [[int(i <= j) for j in range(size)] for i in range(size)]
    return FiniteQSemigroup(name or f"max{size}", labels, "0", add, leq, aux)


def strict_chain(size: int) -> FiniteQSemigroup:
    """
    The max-chain {0, ..., size-1} with k < l iff k < l or k = l = 0.

    Only 0 is self-related, so tau of this Q-semigroup is {0}. With capped
    (saturating) addition the same relation is not additive: 1 < 2 twice
    would force 1 + 1 < 2 + 2, i.e. top < top.
    """
    aux = [[int(i < j or i == j == 0) for j in range(size)] for i in range(size)]
    return max_chain(size, name=f"strict{size}", aux=aux)


def tau_finite(s: FiniteQSemigroup) -> TauResult:
    """
    The Cu-semigroup of paths of a finite Q-semigroup.

    Returns:
        TauResult whose carrier is {a : a < a} ordered by <, with the
        inclusion as endpoint map
    """
    keep = [a for a in s.elements() if s.aux(a, a)]
    position = {a: i for i, a in enumerate(keep)}
    add = [[position[s.add(a, b)] for b in keep] for a in keep]
    leq = [[int(s.aux(a, b)) for b in keep] for a in keep]
    cu = FiniteQSemigroup(f"tau({s.name})", s.labels_of(keep), s.label(s.zero), add, leq, validate=False)
    return TauResult(cu=cu, endpoint=tuple(keep))


def tau_summary(s: FiniteQSemigroup) -> TauSummary:
    result = tau_finite(s)
    return TauSummary(
        source=s.name,
        structure=result.cu.to_structure(),
        endpoint={result.cu.label(i): s.label(a) for i, a in enumerate(result.endpoint)},
        endpoint_surjective=len(result.endpoint) == s.size,
    )


def is_ideal(s: Pom, members: frozenset[int] | set[int]) -> bool:
    """Brute-force test: contains 0, downward closed, closed under addition."""
    if s.zero not in members:
        return False
    for b in members:
        if any(s.leq(a, b) and a not in members for a in s.elements()):
            return False
    return all(s.add(a, b) in members for a in members for b in members)


def enumerate_ideals(s: FiniteQSemigroup) -> list[Ideal]:
    """
    All ideals of a finite Cu-semigroup, ordered by size then members.

    EDUCATIONAL NOTE:
    z_J is in J and dominates every member, so J is the down-set of z_J;
    a down-set of z is closed under addition iff z + z = z. Ideals are
    therefore in bijection with idempotents.
    """
    ideals = [Ideal(members=s.down_set(z), top=z) for z in s.idempotents()]
    return sorted(ideals, key=lambda j: (len(j.members), sorted(j.members)))


def ideal_from_labels(s: FiniteQSemigroup, labels: Sequence[str]) -> Ideal:
    """
    Build an Ideal from member labels.

    Raises:
        PreconditionError: If the labels do not form an ideal
    """
    members = frozenset(s.index(label) for label in labels) | {s.zero}
    if not is_ideal(s, members):
        raise PreconditionError(f"{{{', '.join(s.labels_of(sorted(members)))}}} is not an ideal of {s.name}")
    top = s.total(members)
    return Ideal(members=frozenset(members), top=top)


def quotient(s: FiniteQSemigroup, ideal: Ideal) -> QuotientResult:
    """
    The quotient S/J with its projection.

    Raises:
        PreconditionError: If `ideal` is not an ideal of s
    """
    if not is_ideal(s, ideal.members) or s.total(ideal.members) != ideal.top:
        raise PreconditionError(f"Not an ideal of {s.name}: {sorted(s.labels_of(ideal.members))}")
    z = ideal.top
    representatives = sorted({s.add(a, z) for a in s.elements()})
    position = {r: i for i, r in enumerate(representatives)}
    relabel = z != s.zero

    def label(r: int) -> str:
        return f"[{s.label(r)}]" if relabel else s.label(r)

    labels = [label(r) for r in representatives]
    add = [[position[s.add(r, t)] for t in representatives] for r in representatives]
    leq = [[int(s.leq(r, t)) for t in representatives] for r in representatives]
    cu = FiniteQSemigroup(f"{s.name}/J", labels, label(z), add, leq, validate=False)
    projection = tuple(position[s.add(a, z)] for a in s.elements())
    return QuotientResult(cu=cu, projection=projection, ideal=ideal)


def quotient_summary(s: FiniteQSemigroup, ideal: Ideal) -> QuotientSummary:
    result = quotient(s, ideal)
    return QuotientSummary(
        source=s.name,
        ideal=ideal.summary(s),
        structure=result.cu.to_structure(),
        projection={s.label(a): result.cu.label(c) for a, c in enumerate(result.projection)},
    )


# ---------------------------------------------------------------------------
# Morphism enumeration
# ---------------------------------------------------------------------------


def generators(s: Pom) -> list[int]:
    """
    A generating set of the monoid, chosen greedily from the bottom up.

    Elements are visited by the number of elements below them, so a
    generator is only added when it is not already a sum of earlier ones.
    """
    order = sorted(s.elements(), key=lambda a: (int(s.leq_table[:, a].sum()), a))
    gens: list[int] = []
    reached = {s.zero}
    for a in order:
        if a in reached:
            continue
        gens.append(a)
        frontier = list(reached)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = s.add(x, g)
                    if y not in reached:
                        reached.add(y)
                        new.append(y)
            frontier = new
    return gens


def extend_additively(
    s: Pom,
    gens: Sequence[int],
    values: Sequence[Any],
    add: Callable[[Any, Any], Any],
    zero: Any,
) -> list[Any] | None:
    """
    Extend generator values to an additive map on s, or None if inconsistent.

    Every edge x -> x + g is checked, which makes the extension additive.
    """
    table: list[Any] = [None] * s.size
    table[s.zero] = zero
    queue = [s.zero]
    for x in queue:
        for g, v in zip(gens, values):
            y = s.add(x, g)
            w = add(table[x], v)
            if table[y] is None:
                table[y] = w
                queue.append(y)
            elif table[y] != w:
                return None
    if any(value is None for value in table):
        return None
    return table


class MorphismEnumerator:
    """
    Enumerate additive, monotone, zero-preserving maps between finite poms.

    WHAT: All morphism value tables S -> T, optionally filtered
    WHY: Hom semigroups, the coreflection and the adjunction all reduce to
         finite morphism sets
    HOW: Choose values on a generating set of S, extend additively, keep
         monotone tables; the candidate count |T|^|gens| is checked against
         the configured bound before anything is enumerated

    USAGE EXAMPLE:
        enumerator = MorphismEnumerator(LabSettings())
        tables = enumerator.morphisms(e1, e2)   # [(0,0,0), (0,2,3), (0,3,3)]
    """

    def __init__(self, settings: LabSettings | None = None):
        self.settings = settings or LabSettings()

    def check_bound(self, what: str, estimate: int) -> None:
        if estimate > self.settings.enumeration_bound:
            raise BoundExceededError(what, estimate, self.settings.enumeration_bound)

    def morphisms(
        self,
        source: Pom,
        target: Pom,
        condition: Callable[[MorphismTable], bool] | None = None,
    ) -> list[MorphismTable]:
        """Value tables in lexicographic order."""
        gens = generators(source)
        self.check_bound(f"morphisms {source.name} -> {target.name}", target.size ** len(gens))
        order_pairs = [(a, b) for a in source.elements() for b in source.elements() if a != b and source.leq(a, b)]
        results = []
        for values in itertools.product(range(target.size), repeat=len(gens)):
            table = extend_additively(source, gens, values, target.add, target.zero)
            if table is None:
                continue
            if not all(target.leq(table[a], table[b]) for a, b in order_pairs):
                continue
            candidate = tuple(table)
            if condition is None or condition(candidate):
                results.append(candidate)
        return sorted(results)

    def q_morphisms(self, source: FiniteQSemigroup, target: FiniteQSemigroup) -> list[MorphismTable]:
        """Morphisms that also preserve the auxiliary relation."""
        aux_pairs = [(a, b) for a in source.elements() for b in source.elements() if source.aux(a, b)]

        def preserves_aux(table: MorphismTable) -> bool:
            return all(target.aux(table[a], table[b]) for a, b in aux_pairs)

        return self.morphisms(source, target, preserves_aux)


def pointwise_leq(target: Pom, f: MorphismTable, g: MorphismTable) -> bool:
    return all(target.leq(x, y) for x, y in zip(f, g))


def coreflection_check(
    t: FiniteQSemigroup, s: FiniteQSemigroup, settings: LabSettings | None = None
) -> CoreflectionReport:
    """
    Certify that alpha -> endpoint o alpha is an order-isomorphism
    Cu(T, tau(S)) -> Q(T, S).

    Raises:
        PreconditionError: If T is not a finite Cu-semigroup
        BoundExceededError: If either enumeration exceeds the bound
    """
    if not t.is_cu:
        raise PreconditionError(f"{t.name} must be a Cu-semigroup (aux = leq) for the coreflection check")
    enumerator = MorphismEnumerator(settings)
    tau = tau_finite(s)
    cu_side = enumerator.morphisms(t, tau.cu)
    q_side = enumerator.q_morphisms(t, s)

    images = [tuple(tau.endpoint[v] for v in alpha) for alpha in cu_side]
    q_set = set(q_side)
    failure: list[str] | None = None
    for alpha, image in zip(cu_side, images):
        if image not in q_set:
            failure = tau.cu.labels_of(alpha)
            break
    bijective = failure is None and len(set(images)) == len(images) == len(q_side)

    order_isomorphism = bijective
    if bijective:
        for (a1, i1), (a2, i2) in itertools.product(zip(cu_side, images), repeat=2):
            if pointwise_leq(tau.cu, a1, a2) != pointwise_leq(s, i1, i2):
                order_isomorphism = False
                failure = tau.cu.labels_of(a1) + ["vs"] + tau.cu.labels_of(a2)
                break

    return CoreflectionReport(
        cu_side=t.name,
        q_side=s.name,
        cu_morphism_count=len(cu_side),
        q_morphism_count=len(q_side),
        bijective=bijective,
        order_isomorphism=order_isomorphism,
        failure=failure,
    )


# ---------------------------------------------------------------------------
# Isomorphism and generated families
# ---------------------------------------------------------------------------


def find_isomorphism(s: Pom, t: Pom, compare_aux: bool = False) -> list[int] | None:
    """
    An index map s -> t preserving zero, addition and order, or None.

    Backtracking over candidates with matching down-set sizes; intended for
    the small carriers the test suite compares.
    """
    if s.size != t.size:
        return None

    def signature(p: Pom, a: int) -> tuple[int, int, bool]:
        return (int(p.leq_table[:, a].sum()), int(p.leq_table[a, :].sum()), p.add(a, a) == a)

    s_sig = [signature(s, a) for a in s.elements()]
    t_sig = [signature(t, b) for b in t.elements()]
    s_aux = getattr(s, "aux_table", s.leq_table)
    t_aux = getattr(t, "aux_table", t.leq_table)
    order = sorted(s.elements(), key=lambda a: (a != s.zero, s_sig[a]))
    mapping: list[int] = [-1] * s.size
    used: set[int] = set()

    def consistent(a: int) -> bool:
        for b in s.elements():
            if mapping[b] < 0:
                continue
            if s.leq(a, b) != t.leq(mapping[a], mapping[b]) or s.leq(b, a) != t.leq(mapping[b], mapping[a]):
                return False
            if compare_aux and (
                bool(s_aux[a, b]) != bool(t_aux[mapping[a], mapping[b]])
                or bool(s_aux[b, a]) != bool(t_aux[mapping[b], mapping[a]])
            ):
                return False
            total = s.add(a, b)
            if mapping[total] >= 0 and mapping[total] != t.add(mapping[a], mapping[b]):
                return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return all(mapping[s.add(a, b)] == t.add(mapping[a], mapping[b]) for a in s.elements() for b in s.elements())
        a = order[k]
        candidates = [t.zero] if a == s.zero else [b for b in t.elements() if b not in used and t_sig[b] == s_sig[a]]
        for b in candidates:
            if b in used:
                continue
            mapping[a] = b
            used.add(b)
            if consistent(a) and search(k + 1):
                return True
            used.discard(b)
            mapping[a] = -1
        return False

    return list(mapping) if search(0) else None


def close_aux(pom: Pom, seed_relation: np.ndarray) -> np.ndarray:
    """
    The smallest auxiliary relation containing `seed_relation` and 0 < x.

    The seed must lie inside the order; the closure then stays inside it,
    since the order is itself additive and order-compatible.
    """
    rel = np.asarray(seed_relation).astype(bool) & pom.leq_table
    rel[pom.zero, :] = True
    leq = pom.leq_table.astype(np.float64)
    add = pom.add_table
    while True:
        enlarged = (leq @ rel.astype(np.float64) @ leq) > 0
        pairs = np.argwhere(enlarged)
        sums = np.zeros_like(enlarged)
        sums[add[pairs[:, 0][:, None], pairs[:, 0][None, :]], add[pairs[:, 1][:, None], pairs[:, 1][None, :]]] = True
        enlarged |= sums
        if np.array_equal(enlarged, rel):
            return rel
        rel = enlarged


@lru_cache(maxsize=8)
def enumerate_finite_cu(max_size: int) -> tuple[FiniteQSemigroup, ...]:
    """
    Every finite pom with at most `max_size` elements, up to isomorphism.

    Finite poms are exactly the finite Cu-semigroups, so this is also the
    test family of the tensor falsifier.

    Raises:
        PreconditionError: For max_size above 4 (the search is exponential)
    """
    if max_size > 4:
        raise PreconditionError("Exhaustive pom enumeration is limited to 4 elements")
    found: list[FiniteQSemigroup] = []
    for n in range(1, max_size + 1):
        seen: set[tuple] = set()
        nonzero = list(range(1, n))
        pairs = [(i, j) for i in nonzero for j in nonzero if i <= j]
        orders = _orders_with_bottom(n)
        for sums in itertools.product(range(n), repeat=len(pairs)):
            add = [[0] * n for _ in range(n)]
            for i in range(n):
                add[0][i] = add[i][0] = i
            for (i, j), v in zip(pairs, sums):
                add[i][j] = add[j][i] = v
            if not all(add[add[a][b]][c] == add[a][add[b][c]] for a in nonzero for b in nonzero for c in nonzero):
                continue
            for leq in orders:
                if not all(
                    leq[add[a][c]][add[b][c]] for a in range(n) for b in range(n) if leq[a][b] for c in nonzero
                ):
                    continue
                key = _canonical_key(add, leq, n)
                if key in seen:
                    continue
                seen.add(key)
                labels = ["0", "a", "b", "c"][:n]
                found.append(FiniteQSemigroup(f"P{n}.{len(seen)}", labels, "0", add, leq, validate=False))
    return tuple(found)


def _orders_with_bottom(n: int) -> list[list[list[int]]]:
    nonzero = list(range(1, n))
    off_diagonal = [(i, j) for i in nonzero for j in nonzero if i != j]
    orders = []
    for flags in itertools.product((0, 1), repeat=len(off_diagonal)):
        leq = [[int(i == j or i == 0) for j in range(n)] for i in range(n)]
        for (i, j), flag in zip(off_diagonal, flags):
            leq[i][j] = flag
        if any(leq[i][j] and leq[j][i] and i != j for i in range(n) for j in range(n)):
            continue
        if any(leq[i][j] and leq[j][k] and not leq[i][k] for i in range(n) for j in range(n) for k in range(n)):
            continue
        orders.append(leq)
    return orders


def _canonical_key(add: list[list[int]], leq: list[list[int]], n: int) -> tuple:
    best = None
    for perm in itertools.permutations(range(1, n)):
        relabel = [0, *perm]
        inverse = [0] * n
        for old, new in enumerate(relabel):
            inverse[new] = old
        key = (
            tuple(relabel[add[inverse[i]][inverse[j]]] for i in range(n) for j in range(n)),
            tuple(leq[inverse[i]][inverse[j]] for i in range(n) for j in range(n)),
        )
        if best is None or key < best:
            best = key
    return best if best is not None else ((0,), (1,))


def random_q_semigroup(rng: np.random.Generator, max_size: int = 5) -> FiniteQSemigroup:
    """
    A random valid finite Q-semigroup with at most `max_size` elements.

    The pom is drawn from the exhaustive list (up to 4 elements) together
    with capped and max chains up to max_size; the auxiliary relation is
    the closure of a random subset of the order.
    """
    pool: list[Pom] = list(enumerate_finite_cu(min(max_size, 4)))
    for size in range(5, max_size + 1):
        pool.extend([capped_chain(size), max_chain(size)])
    pom = pool[int(rng.integers(len(pool)))]
    keep = rng.random(pom.leq_table.shape) < rng.uniform(0.2, 0.9)
    rel = close_aux(pom, pom.leq_table & keep)
    return FiniteQSemigroup(
        f"{pom.name}~{int(rel.sum())}",
        pom.labels,
        pom.label(pom.zero),
        pom.add_table,
        pom.leq_table,
        rel,
        validate=False,
    )


__all__ = [
    "FiniteQSemigroup",
    "AuxRelation",
    "TauResult",
    "Ideal",
    "QuotientResult",
    "MorphismEnumerator",
    "trivial",
    "direct_sum",
    "capped_chain",
    "max_chain",
    "strict_chain",
    "tau_finite",
    "tau_summary",
    "is_ideal",
    "enumerate_ideals",
    "ideal_from_labels",
    "quotient",
    "quotient_summary",
    "generators",
    "extend_additively",
    "pointwise_leq",
    "coreflection_check",
    "find_isomorphism",
    "close_aux",
    "enumerate_finite_cu",
    "random_q_semigroup",
]
