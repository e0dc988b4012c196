"""
Catalog Calculator for cuntzlab

Exact implementations of the named Cu-semigroups and Cu-semirings:

    Nbar        extended natural numbers {0, 1, 2, ..., inf}
    Nbar^k      k-tuples over Nbar
    Mat[l,k]    l x k matrices over Nbar
    E<k>        {0, 1, ..., k, inf} with a + b = inf whenever a + b > k
    Pbar        extended nonnegative rationals [0, inf]
    Pbar<1      (Pbar, <_1), a < b iff a < inf and a <= b
    Pbar<inf    (Pbar, <_inf), a < b iff a <= b
    Z           compact naturals and soft (0, inf]
    R{p,...}    compact rationals with denominators over the given primes
    Q           R over all primes
    M1 / Minf   compact [0, inf) and soft (0, inf]; Minf adds a compact inf
    Sex         [0, 1] u {inf} with a + b = inf whenever a + b > 1
    Hex         compact {0} u [1, inf] and soft (1, inf]

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (catalog_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
Only rational values are represented. Every order, addition and
way-below fact about these carriers is decidable on rationals; suprema
of increasing sequences exist in the real carriers and are exposed only
for eventually constant or rational-limit inputs.

In the compact/soft carriers (Z, R_q, M1, Minf, Hex) an element is
Compact(v) or Soft(v). Across the two parts:

    Compact(a) <= Soft(b)   iff a < b
    Soft(a) <= Compact(b)   iff a <= b

and the soft part absorbs in addition: Compact(a) + Soft(b) = Soft(a + b).

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from src.algebra.core_order import Carrier
from src.algebra.errors import PreconditionError, StructureError, UnsupportedOperationError
from src.algebra.extended import (
    INF,
    ExtNatural,
    ExtRational,
    ext_add,
    ext_mul,
    format_ext,
    is_inf,
    nat_add,
    nat_mul,
    parse_ext,
    parse_nat,
    prime_factors,
    rational_grid,
)
from src.algebra.finite_q import FiniteQSemigroup

Matrix = tuple[tuple[ExtNatural, ...], ...]


@dataclass(frozen=True)
class Compact:
    """A compact element of a compact/soft carrier."""

    value: ExtRational


@dataclass(frozen=True)
class Soft:
    """A nonzero soft element of a compact/soft carrier."""

    value: ExtRational


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested inside brackets or parentheses."""
    parts, depth, current = [], 0, []
    for char in text:
        if char in "([":
            depth += 1
        elif char in ")]":
            depth -= 1
        if char == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(char)
    tail = "".join(current).strip()
    if tail or parts:
        parts.append(tail)
    return parts


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


# ---------------------------------------------------------------------------
# Extended natural numbers, tuples and matrices
# ---------------------------------------------------------------------------


class ExtendedNaturals(Carrier):
    """Nbar = {0, 1, 2, ..., inf}; a << b iff a <= b and a is finite."""

    name = "Nbar"
    has_product = True

    @property
    def zero(self) -> int:
        return 0

    def leq(self, a: ExtNatural, b: ExtNatural) -> bool:
        return a <= b

    def add(self, a: ExtNatural, b: ExtNatural) -> ExtNatural:
        return nat_add(a, b)

    def waybelow(self, a: ExtNatural, b: ExtNatural) -> bool:
        return not is_inf(a) and a <= b

    def is_soft(self, a: ExtNatural) -> bool:
        return a == 0 or is_inf(a)

    def mul(self, a: ExtNatural, b: ExtNatural) -> ExtNatural:
        return nat_mul(a, b)

    @property
    def unit(self) -> int:
        return 1

    def sup_multiple(self, a: ExtNatural) -> ExtNatural:
        return 0 if a == 0 else INF

    def interpolate_between(self, low: ExtNatural, other: ExtNatural, high: ExtNatural) -> ExtNatural:
        c = max(low, other)
        if self.waybelow(c, high):
            return c
        raise UnsupportedOperationError(f"Nbar: nothing finite between {low}, {other} and {high}")

    def parse(self, text: str) -> ExtNatural:
        return parse_nat(text)

    def format(self, a: ExtNatural) -> str:
        return format_ext(a)

    def sample(self, count: int, seed: int = 0) -> list[ExtNatural]:
        pool: list[ExtNatural] = [0, 1, 2, 3, INF, 5, 8]
        extra = sorted({int(v) for v in _rng(seed).integers(4, 100, size=max(count, 1))})
        values = list(dict.fromkeys(pool + extra))
        return values[: max(count, 1)]


class NbarPower(Carrier):
    """Nbar^k with componentwise order, addition and product."""

    has_product = True

    def __init__(self, k: int):
        if k < 1:
            raise PreconditionError(f"Nbar^k needs k >= 1, got {k}")
        self.k = k
        self.name = f"Nbar^{k}"
        self._nbar = ExtendedNaturals()

    @property
    def zero(self) -> tuple[ExtNatural, ...]:
        return (0,) * self.k

    def leq(self, a: tuple, b: tuple) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(nat_add(x, y) for x, y in zip(a, b))

    def waybelow(self, a: tuple, b: tuple) -> bool:
        return all(self._nbar.waybelow(x, y) for x, y in zip(a, b))

    def is_soft(self, a: tuple) -> bool:
        return all(self._nbar.is_soft(x) for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(nat_mul(x, y) for x, y in zip(a, b))

    @property
    def unit(self) -> tuple:
        return (1,) * self.k

    def sup_multiple(self, a: tuple) -> tuple:
        return tuple(self._nbar.sup_multiple(x) for x in a)

    def parse(self, text: str) -> tuple:
        token = text.strip()
        if not (token[:1] in "([" and token[-1:] in ")]"):
            raise StructureError(f"{self.name}: expected a tuple like (1,0,inf), got {text!r}")
        values = tuple(parse_nat(part) for part in split_top_level(token[1:-1]))
        if len(values) != self.k:
            raise StructureError(f"{self.name}: expected {self.k} entries, got {len(values)}")
        return values

    def format(self, a: tuple) -> str:
        return "(" + ",".join(format_ext(x) for x in a) + ")"

    def sample(self, count: int, seed: int = 0) -> list[tuple]:
        rng = _rng(seed)
        base: list[ExtNatural] = [0, 1, 2, 3, INF]
        found = [self.zero, self.unit]
        for _ in range(count * 4):
            candidate = tuple(base[int(i)] for i in rng.integers(0, len(base), size=self.k))
            if candidate not in found:
                found.append(candidate)
            if len(found) >= count:
                break
        return found[: max(count, 1)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product over Nbar with 0 * inf = 0."""
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise PreconditionError("Matrix shapes do not match for multiplication")
    columns = len(b[0]) if b else 0
    result = []
    for row in a:
        entries = []
        for j in range(columns):
            total: ExtNatural = 0
            for t in range(inner):
                total = nat_add(total, nat_mul(row[t], b[t][j]))
            entries.append(total)
        result.append(tuple(entries))
    return tuple(result)


def mat_apply(a: Matrix, v: tuple) -> tuple:
    """A v for a column vector v over Nbar."""
    return tuple(row[0] for row in mat_mul(a, tuple((x,) for x in v)))


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """The Kronecker product over Nbar."""
    rows = []
    for row_a in a:
        for row_b in b:
            rows.append(tuple(nat_mul(x, y) for x in row_a for y in row_b))
    return tuple(rows)


def identity_matrix(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


class NbarMatrices(Carrier):
    """
    Mat[l,k](Nbar) with entrywise order and addition.

    A << B iff A has finite entries and A <= B. Square matrices carry the
    matrix product; for k >= 2 it is noncommutative.
    """

    def __init__(self, rows: int, cols: int):
        if rows < 1 or cols < 1:
            raise PreconditionError(f"Matrix carriers need positive dimensions, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.name = f"Mat[{rows},{cols}]"
        self.has_product = rows == cols
        self._nbar = ExtendedNaturals()

    @property
    def zero(self) -> Matrix:
        return tuple((0,) * self.cols for _ in range(self.rows))

    def leq(self, a: Matrix, b: Matrix) -> bool:
        return all(x <= y for ra, rb in zip(a, b) for x, y in zip(ra, rb))

    def add(self, a: Matrix, b: Matrix) -> Matrix:
        return tuple(tuple(nat_add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def waybelow(self, a: Matrix, b: Matrix) -> bool:
        return all(not is_inf(x) for row in a for x in row) and self.leq(a, b)

    def is_soft(self, a: Matrix) -> bool:
        return all(x == 0 or is_inf(x) for row in a for x in row)

    def mul(self, a: Matrix, b: Matrix) -> Matrix:
        if not self.has_product:
            raise UnsupportedOperationError(f"{self.name} is not square; it has no product")
        return mat_mul(a, b)

    @property
    def unit(self) -> Matrix:
        if not self.has_product:
            raise UnsupportedOperationError(f"{self.name} is not square; it has no unit")
        return identity_matrix(self.rows)

    def sup_multiple(self, a: Matrix) -> Matrix:
        return tuple(tuple(self._nbar.sup_multiple(x) for x in row) for row in a)

    def parse(self, text: str) -> Matrix:
        token = text.strip()
        if token.startswith("mat"):
            token = token[3:].strip()
        if not (token.startswith("[") and token.endswith("]")):
            raise StructureError(f"{self.name}: expected mat[[..],[..]], got {text!r}")
        rows = []
        for row_text in split_top_level(token[1:-1]):
            row_text = row_text.strip()
            if not (row_text.startswith("[") and row_text.endswith("]")):
                raise StructureError(f"{self.name}: malformed matrix row {row_text!r}")
            rows.append(tuple(parse_nat(v) for v in split_top_level(row_text[1:-1])))
        if len(rows) != self.rows or any(len(row) != self.cols for row in rows):
            raise StructureError(f"{self.name}: expected a {self.rows}x{self.cols} matrix, got {text!r}")
        return tuple(rows)

    def format(self, a: Matrix) -> str:
        return "mat[" + ",".join("[" + ",".join(format_ext(x) for x in row) + "]" for row in a) + "]"

    def sample(self, count: int, seed: int = 0) -> list[Matrix]:
        rng = _rng(seed)
        base: list[ExtNatural] = [0, 1, 2, 3, INF]
        found = [self.zero]
        if self.has_product:
            found.append(identity_matrix(self.rows))
        for _ in range(count * 4):
            flat = [base[int(i)] for i in rng.integers(0, len(base), size=self.rows * self.cols)]
            candidate = tuple(tuple(flat[r * self.cols : (r + 1) * self.cols]) for r in range(self.rows))
            if candidate not in found:
                found.append(candidate)
            if len(found) >= count:
                break
        return found[: max(count, 1)]


class CappedNaturals(Carrier):
    """E_k = {0, 1, ..., k, inf} with a + b = inf whenever a + b > k."""

    is_finite = True
    has_product = True

    def __init__(self, k: int):
        if k < 0:
            raise PreconditionError(f"E_k needs k >= 0, got {k}")
        self.k = k
        self.name = f"E{k}"

    def _cap(self, value: ExtNatural) -> ExtNatural:
        return INF if is_inf(value) or value > self.k else value

    @property
    def zero(self) -> int:
        return 0

    def leq(self, a: ExtNatural, b: ExtNatural) -> bool:
        return a <= b

    def add(self, a: ExtNatural, b: ExtNatural) -> ExtNatural:
        return self._cap(nat_add(a, b))

    def waybelow(self, a: ExtNatural, b: ExtNatural) -> bool:
        return a <= b

    def mul(self, a: ExtNatural, b: ExtNatural) -> ExtNatural:
        return self._cap(nat_mul(a, b))

    @property
    def unit(self) -> ExtNatural:
        return 1 if self.k >= 1 else INF

    def elements(self) -> list[ExtNatural]:
        return [*range(self.k + 1), INF]

    def parse(self, text: str) -> ExtNatural:
        value = parse_nat(text)
        if not is_inf(value) and value > self.k:
            raise StructureError(f"{self.name}: {value} is not an element (0..{self.k} or inf)")
        return value

    def format(self, a: ExtNatural) -> str:
        return format_ext(a)

    def sample(self, count: int, seed: int = 0) -> list[ExtNatural]:
        return self.elements()[: max(count, 1)]

    def interpolate_between(self, low: ExtNatural, other: ExtNatural, high: ExtNatural) -> ExtNatural:
        c = max(low, other)
        if c <= high:
            return c
        raise UnsupportedOperationError(f"{self.name}: nothing between {low}, {other} and {high}")

    def to_finite(self) -> FiniteQSemigroup:
        return FiniteQSemigroup.from_carrier(self)


# ---------------------------------------------------------------------------
# Extended rationals and the truncated interval
# ---------------------------------------------------------------------------


class ExtendedRationals(Carrier):
    """
    Pbar = [0, inf] (rationals) with a << b iff a < b or a = 0.

    The same carrier with a coarser auxiliary relation gives the
    Q-semigroups (Pbar, <_1) and (Pbar, <_inf), whose path semigroups are
    M1 and Minf.
    """

    has_product = True
    supports_scaling = True
    classifiable = True

    MODES = {"waybelow": "Pbar", "finite": "Pbar<1", "order": "Pbar<inf"}

    def __init__(self, mode: str = "waybelow"):
        if mode not in self.MODES:
            raise PreconditionError(f"Unknown Pbar mode {mode!r}; use one of {sorted(self.MODES)}")
        self.mode = mode
        self.name = self.MODES[mode]

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    def leq(self, a: ExtRational, b: ExtRational) -> bool:
        return a <= b

    def add(self, a: ExtRational, b: ExtRational) -> ExtRational:
        return ext_add(a, b)

    def waybelow(self, a: ExtRational, b: ExtRational) -> bool:
        return a == 0 or a < b

    def aux(self, a: ExtRational, b: ExtRational) -> bool:
        if self.mode == "finite":
            return not is_inf(a) and a <= b
        if self.mode == "order":
            return a <= b
        return self.waybelow(a, b)

    def is_soft(self, a: ExtRational) -> bool:
        return True

    def mul(self, a: ExtRational, b: ExtRational) -> ExtRational:
        return ext_mul(a, b)

    @property
    def unit(self) -> Fraction:
        return Fraction(1)

    def scale(self, lam: Fraction, a: ExtRational) -> ExtRational:
        return ext_mul(lam, a)

    def sup_multiple(self, a: ExtRational) -> ExtRational:
        return Fraction(0) if a == 0 else INF

    def dominates_below(self, endpoint: ExtRational, attained: bool, c: ExtRational) -> bool:
        # values strictly increasing to the endpoint are < c iff endpoint <= c
        if attained:
            return self.aux(endpoint, c)
        return endpoint <= c

    def interpolate_between(self, low: ExtRational, other: ExtRational, high: ExtRational) -> ExtRational:
        m = max(low, other)
        candidates: list[ExtRational] = []
        if is_inf(high):
            candidates.append(INF if is_inf(m) else m + 1)
        else:
            candidates.append((m + high) / 2)
        candidates.append(high)
        for c in candidates:
            if self.aux(low, c) and self.aux(other, c) and self.aux(c, high):
                return c
        raise UnsupportedOperationError(
            f"{self.name}: no element between {format_ext(low)}, {format_ext(other)} and {format_ext(high)}"
        )

    def parse(self, text: str) -> ExtRational:
        return parse_ext(text)

    def format(self, a: ExtRational) -> str:
        return format_ext(a)

    def sample(self, count: int, seed: int = 0) -> list[ExtRational]:
        rng = _rng(seed)
        pool: list[ExtRational] = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2), INF, Fraction(3, 2)]
        for _ in range(count * 4):
            if len(pool) >= count:
                break
            den = int(rng.integers(1, 9))
            value = Fraction(int(rng.integers(1, 5 * den)), den)
            if value not in pool:
                pool.append(value)
        return pool[: max(count, 1)]


class TruncatedInterval(Carrier):
    """
    Sex = [0, 1] u {inf}, ordered and added inside Pbar with a + b = inf
    whenever a + b > 1. It is a simple Cu-semigroup.
    """

    name = "Sex"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    def _check(self, value: ExtRational) -> ExtRational:
        if not is_inf(value) and value > 1:
            raise StructureError(f"Sex: {format_ext(value)} is not in [0,1] u {{inf}}")
        return value

    def leq(self, a: ExtRational, b: ExtRational) -> bool:
        return a <= b

    def add(self, a: ExtRational, b: ExtRational) -> ExtRational:
        total = ext_add(a, b)
        return INF if is_inf(total) or total > 1 else total

    def waybelow(self, a: ExtRational, b: ExtRational) -> bool:
        return a == 0 or a < b or (is_inf(a) and is_inf(b))

    def is_soft(self, a: ExtRational) -> bool:
        return True

    def sup_multiple(self, a: ExtRational) -> ExtRational:
        return Fraction(0) if a == 0 else INF

    def dilate(self, t: ExtRational, a: ExtRational) -> ExtRational:
        """t*a capped to inf above 1."""
        product = ext_mul(t, a)
        return INF if is_inf(product) or product > 1 else product

    def parse(self, text: str) -> ExtRational:
        return self._check(parse_ext(text))

    def format(self, a: ExtRational) -> str:
        return format_ext(a)

    def sample(self, count: int, seed: int = 0) -> list[ExtRational]:
        rng = _rng(seed)
        pool: list[ExtRational] = [Fraction(0), Fraction(1), Fraction(1, 2), INF]
        grid = rational_grid(12)
        pool.extend(value for i in rng.permutation(len(grid)) if (value := grid[int(i)]) not in pool)
        return pool[: max(count, 1)]


# ---------------------------------------------------------------------------
# Compact/soft carriers
# ---------------------------------------------------------------------------

CompactOrSoft = Compact | Soft


class CompactSoftCarrier(Carrier):
    """
    Common rules for carriers split into compact and soft parts.

    WHAT: Order, addition, way-below and product for Compact(v) | Soft(v)
    WHY: Z, R_q, M1, Minf and Hex differ only in which values are allowed
    HOW: Subclasses decide the value domains; the optional compact infinity
         (Minf, Hex) is the top element and absorbs every sum
    """

    compact_infinity: bool = False

    def compact_allowed(self, value: ExtRational) -> bool:
        raise NotImplementedError

    def soft_allowed(self, value: ExtRational) -> bool:
        return value > 0

    def make(self, element: CompactOrSoft) -> CompactOrSoft:
        """Validate an element against this carrier's value domains."""
        if isinstance(element, Compact):
            ok = self.compact_allowed(element.value)
        elif isinstance(element, Soft):
            ok = self.soft_allowed(element.value)
        else:
            ok = False
        if not ok:
            raise StructureError(f"{element!r} is not an element of {self.name}")
        return element

    @property
    def zero(self) -> Compact:
        return Compact(Fraction(0))

    def _is_top(self, a: CompactOrSoft) -> bool:
        return self.compact_infinity and isinstance(a, Compact) and is_inf(a.value)

    def leq(self, a: CompactOrSoft, b: CompactOrSoft) -> bool:
        if isinstance(a, Compact) and isinstance(b, Soft):
            return a.value < b.value
        return a.value <= b.value

    def add(self, a: CompactOrSoft, b: CompactOrSoft) -> CompactOrSoft:
        if self._is_top(a) or self._is_top(b):
            return Compact(INF)
        total = ext_add(a.value, b.value)
        if isinstance(a, Compact) and isinstance(b, Compact):
            return Compact(total)
        return Soft(total)

    def waybelow(self, a: CompactOrSoft, b: CompactOrSoft) -> bool:
        if isinstance(a, Compact):
            return self.leq(a, b)
        if isinstance(b, Compact):
            return a.value <= b.value
        return a.value < b.value

    def is_compact(self, a: CompactOrSoft) -> bool:
        return isinstance(a, Compact)

    def is_soft(self, a: CompactOrSoft) -> bool:
        return isinstance(a, Soft) or a.value == 0 or self._is_top(a)

    def mul(self, a: CompactOrSoft, b: CompactOrSoft) -> CompactOrSoft:
        if not self.has_product:
            raise UnsupportedOperationError(f"{self.name} has no product")
        if a.value == 0 or b.value == 0:
            return self.zero
        if self._is_top(a) or self._is_top(b):
            return Compact(INF)
        product = ext_mul(a.value, b.value)
        if isinstance(a, Compact) and isinstance(b, Compact):
            return Compact(product)
        return Soft(product)

    @property
    def unit(self) -> Compact:
        if not self.has_product:
            raise UnsupportedOperationError(f"{self.name} has no product")
        return Compact(Fraction(1))

    def soften(self, a: CompactOrSoft) -> CompactOrSoft:
        """The soft element with the same value (zero stays zero)."""
        if a.value == 0:
            return self.zero
        return Soft(a.value)

    def sup_multiple(self, a: CompactOrSoft) -> CompactOrSoft:
        if a.value == 0:
            return self.zero
        if self._is_top(a):
            return a
        return Soft(INF)

    def parse(self, text: str) -> CompactOrSoft:
        token = text.strip().lower()
        match = re.fullmatch(r"(soft|cpt)\((.+)\)", token)
        if match:
            kind, value = match.groups()
            element: CompactOrSoft = Soft(parse_ext(value)) if kind == "soft" else Compact(parse_ext(value))
        else:
            value = parse_ext(token)
            if is_inf(value):
                element = Soft(INF) if self.soft_allowed(INF) else Compact(INF)
            else:
                element = Compact(value)
        return self.make(element)

    def format(self, a: CompactOrSoft) -> str:
        if isinstance(a, Soft):
            return f"soft({format_ext(a.value)})"
        if is_inf(a.value):
            return "cpt(inf)"
        return format_ext(a.value)

    def compact_pool(self) -> list[ExtRational]:
        return [Fraction(1), Fraction(2), Fraction(3)]

    def soft_pool(self) -> list[ExtRational]:
        return [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), INF]

    def sample(self, count: int, seed: int = 0) -> list[CompactOrSoft]:
        rng = _rng(seed)
        found: list[CompactOrSoft] = [self.zero]
        candidates: list[CompactOrSoft] = [Compact(v) for v in self.compact_pool()] + [
            Soft(v) for v in self.soft_pool()
        ]
        for _ in range(count * 2):
            den = int(rng.integers(1, 5))
            value = Fraction(int(rng.integers(1, 4 * den)), den)
            candidates.append(Compact(value))
            candidates.append(Soft(value))
        for candidate in candidates:
            if len(found) >= count:
                break
            if candidate in found:
                continue
            try:
                found.append(self.make(candidate))
            except StructureError:
                continue
        return found[: max(count, 1)]


class UHFSemigroup(CompactSoftCarrier):
    """
    R_q for a supernatural number q = q^2, given by its prime set.

    An empty prime set is Z (= R_1); `primes=None` stands for every prime
    (Q). Compact values are rationals whose denominators only involve q.
    """

    has_product = True

    def __init__(self, primes: Iterable[int] | None):
        if primes is None:
            self.primes: frozenset[int] | None = None
            self.name = "Q"
            return
        self.primes = frozenset(int(p) for p in primes)
        for p in self.primes:
            if p < 2 or prime_factors(p) != {p}:
                raise PreconditionError(f"{p} is not a prime")
        self.name = "Z" if not self.primes else "R{" + ",".join(str(p) for p in sorted(self.primes)) + "}"

    def allows_denominator(self, denominator: int) -> bool:
        return self.primes is None or prime_factors(denominator) <= self.primes

    def compact_allowed(self, value: ExtRational) -> bool:
        return not is_inf(value) and value >= 0 and self.allows_denominator(Fraction(value).denominator)

    def includes(self, other: "UHFSemigroup") -> bool:
        """R_p -> R_q is unital-embeddable iff p divides q (prime sets)."""
        if self.primes is None:
            return True
        return other.primes is not None and other.primes <= self.primes

    def compact_pool(self) -> list[ExtRational]:
        pool: list[ExtRational] = [Fraction(1), Fraction(2), Fraction(3)]
        for p in sorted(self.primes or {2, 3}):
            pool.extend([Fraction(1, p), Fraction(p + 1, p)])
        return pool


class FactorSemigroup(CompactSoftCarrier):
    """M1 (compact [0, inf), soft (0, inf]) and Minf (adds a compact inf)."""

    def __init__(self, infinite: bool = False):
        self.compact_infinity = infinite
        self.has_product = not infinite
        self.name = "Minf" if infinite else "M1"

    def compact_allowed(self, value: ExtRational) -> bool:
        return value >= 0 and (self.compact_infinity or not is_inf(value))

    def compact_pool(self) -> list[ExtRational]:
        pool: list[ExtRational] = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3, 2)]
        if self.compact_infinity:
            pool.append(INF)
        return pool


class DilationSemigroup(CompactSoftCarrier):
    """
    Hex: compact {0} u [1, inf] and soft (1, inf].

    Compact(t) stands for the dilation a -> t*a of Sex; the product is
    composition of dilations, and the compact inf is the top element.
    """

    name = "Hex"
    compact_infinity = True
    has_product = True

    def compact_allowed(self, value: ExtRational) -> bool:
        return value == 0 or value >= 1

    def soft_allowed(self, value: ExtRational) -> bool:
        return value > 1

    def compact_pool(self) -> list[ExtRational]:
        return [Fraction(1), Fraction(3, 2), Fraction(2), INF]

    def soft_pool(self) -> list[ExtRational]:
        return [Fraction(3, 2), Fraction(2), Fraction(5, 2), INF]


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

CATALOG_DESCRIPTIONS: dict[str, str] = {
    "Nbar": "extended natural numbers {0,1,2,...,inf}",
    "Nbar^k": "k-tuples over Nbar, componentwise semiring",
    "Mat[l,k]": "l x k matrices over Nbar (square ones form a noncommutative semiring)",
    "E<k>": "{0,...,k,inf} with a+b = inf whenever a+b > k (finite)",
    "Pbar": "extended nonnegative rationals, a << b iff a < b or a = 0",
    "Pbar<1": "Q-semigroup (Pbar, <_1): a < b iff a < inf and a <= b",
    "Pbar<inf": "Q-semigroup (Pbar, <_inf): a < b iff a <= b",
    "Z": "compact naturals and soft (0,inf]",
    "R{p,...}": "compact rationals with denominators over the given primes, soft (0,inf]",
    "Q": "R over all primes",
    "M1": "compact [0,inf) and soft (0,inf]",
    "Minf": "M1 with an extra compact inf",
    "Sex": "[0,1] u {inf} with a+b = inf whenever a+b > 1",
    "Hex": "compact {0} u [1,inf] and soft (1,inf]",
}


def catalog(name: str, **params: Any) -> Carrier:
    """
    Look up a catalog carrier by name.

    Args:
        name: A catalog name such as "E3", "R{2,3}", "Nbar^2", "Mat[2,3]",
              or a bare family name with parameters ("E", k=3; "R", primes=(2,))

    Returns:
        A Carrier implementing exact leq/add/waybelow

    Raises:
        PreconditionError: Unknown name or invalid parameters (e.g. R with no primes)
    """
    token = name.strip()
    fixed: dict[str, Any] = {
        "Nbar": ExtendedNaturals,
        "Pbar": lambda: ExtendedRationals("waybelow"),
        "Pbar<1": lambda: ExtendedRationals("finite"),
        "Pbar<inf": lambda: ExtendedRationals("order"),
        "Z": lambda: UHFSemigroup(()),
        "Q": lambda: UHFSemigroup(None),
        "M1": lambda: FactorSemigroup(False),
        "Minf": lambda: FactorSemigroup(True),
        "Sex": TruncatedInterval,
        "Hex": DilationSemigroup,
    }
    if token in fixed:
        return fixed[token]()

    if token == "E" and "k" in params:
        return CappedNaturals(int(params["k"]))
    if match := re.fullmatch(r"E(\d+)", token):
        return CappedNaturals(int(match.group(1)))

    if token == "R" and "primes" in params:
        primes = tuple(params["primes"])
        if not primes:
            raise PreconditionError("R_q needs q = q^2 != 1, i.e. a nonempty prime set (R_1 is Z)")
        return UHFSemigroup(primes)
    if match := re.fullmatch(r"R\{?([\d,\s]*)\}?", token):
        primes = tuple(int(p) for p in match.group(1).replace(" ", "").split(",") if p)
        if not primes:
            raise PreconditionError("R_q needs q = q^2 != 1, i.e. a nonempty prime set (R_1 is Z)")
        return UHFSemigroup(primes)

    if token == "Nbar^k" and "k" in params:
        return NbarPower(int(params["k"]))
    if match := re.fullmatch(r"Nbar\^(\d+)", token):
        return NbarPower(int(match.group(1)))

    if token == "Mat" and {"l", "k"} <= params.keys():
        return NbarMatrices(int(params["l"]), int(params["k"]))
    if match := re.fullmatch(r"Mat\[(\d+),\s*(\d+)\]", token):
        return NbarMatrices(int(match.group(1)), int(match.group(2)))

    raise PreconditionError(f"Unknown catalog carrier {name!r}; known: {', '.join(CATALOG_DESCRIPTIONS)}")


def semiring_mul(name: str | Carrier, a: Any, b: Any) -> Any:
    """
    Product in a catalog Cu-semiring.

    Raises:
        UnsupportedOperationError: If the carrier has no product
    """
    carrier = catalog(name) if isinstance(name, str) else name
    if not carrier.has_product:
        raise UnsupportedOperationError(f"{carrier.name} has no product")
    return carrier.mul(a, b)


def finite_carrier(carrier: Carrier) -> FiniteQSemigroup:
    """Tabulate a finite carrier (aux = way-below)."""
    if not carrier.is_finite:
        raise PreconditionError(f"{carrier.name} is infinite")
    if isinstance(carrier, FiniteQSemigroup):
        return carrier
    return FiniteQSemigroup.from_carrier(carrier)


__all__ = [
    "Compact",
    "Soft",
    "CompactOrSoft",
    "Matrix",
    "ExtendedNaturals",
    "NbarPower",
    "NbarMatrices",
    "CappedNaturals",
    "ExtendedRationals",
    "TruncatedInterval",
    "CompactSoftCarrier",
    "UHFSemigroup",
    "FactorSemigroup",
    "DilationSemigroup",
    "CATALOG_DESCRIPTIONS",
    "catalog",
    "semiring_mul",
    "finite_carrier",
    "mat_mul",
    "mat_apply",
    "kronecker",
    "identity_matrix",
    "split_top_level",
]
