"""
Path Calculator for cuntzlab

Rationally indexed increasing paths over an effective Q-semigroup: exact
evaluation, classification, comparison, cut-downs, suprema, way-below,
the dyadic chain builder and the back-and-forth index isomorphism.

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (path_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL CONTEXT:
A path is a map f from the rationals in (0,1) into a Q-semigroup S with
f(l') < f(l) whenever l' < l, where < is the auxiliary relation. Paths are
preordered by

    f <~ g   iff   for every l there is m with f(l) < g(m),

and the path semigroup tau(S) is the quotient by the induced equivalence.
Two cases are decided exactly:

    finite carriers        a path is eventually constant at some a < a,
                           and [f] <= [g] iff eventual(f) < eventual(g)
    classifiable carriers  (Pbar with its three relations) a path class is
                           (endpoint, attained); see path_compare

Everything else is reported UNKNOWN rather than guessed.

PATH EXPRESSIONS:
    const(a)                  the constant path at a (needs a < a)
    scaled(a)                 l -> l*a on carriers with scaling
    stitch[(c1,p1),...,(1,pn)] piece p_i on [c_(i-1), c_i), evaluated at l
    cut(p,e)                  l -> p(l - e) for l > e, zero before
    interp(p,lo,hi)           l -> p(lo + l*(hi - lo))
    add(p,q)                  pointwise sum

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import itertools
import math
import threading
import warnings
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from src.algebra.catalog import split_top_level
from src.algebra.core_order import Carrier
from src.algebra.errors import (
    BoundExceededError,
    PathConstructionError,
    PreconditionError,
    StructureError,
    UnsupportedOperationError,
)
from src.algebra.extended import format_ext
from src.algebra.finite_q import FiniteQSemigroup
from src.models.path_inputs import Comparison, Decision, PathClassSummary, PathComparisonReport
from src.models.settings_inputs import LabSettings

ONE = Fraction(1)

# index at which an unmatched catch-up search gives up: mu = 1 - 2**-MAX_CATCH_UP
MAX_CATCH_UP = 64


def rational_index(value: Any) -> Fraction:
    """
    Validate a path index: an exact rational strictly between 0 and 1.

    Raises:
        PreconditionError: For floats, non-numbers and values outside (0,1)
    """
    index = _exact(value)
    if not 0 < index < 1:
        raise PreconditionError(f"Path index {format_ext(index)} is outside (0,1)")
    return index


def _cut(value: Any) -> Fraction:
    cut = _exact(value)
    if not 0 < cut <= 1:
        raise PathConstructionError(f"Stitch cut {format_ext(cut)} is outside (0,1]")
    return cut


def _exact(value: Any) -> Fraction:
    if isinstance(value, (float, bool)):
        raise PreconditionError(f"Path indices are exact rationals, got {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise PreconditionError(f"{value!r} is not an exact rational") from None


# ---------------------------------------------------------------------------
# Path expressions
# ---------------------------------------------------------------------------


class PathExpr(ABC):
    """
    An immutable, exactly evaluable path over a carrier.

    Every variant exposes `carrier`, `value_at(l)` for l in (0,1), and
    `left_limit(t)`: the value approached as the index rises to t, together
    with whether that value is already taken before t.
    """

    @abstractmethod
    def value_at(self, lam: Fraction) -> Any: ...

    @abstractmethod
    def left_limit(self, t: Fraction) -> tuple[Any, bool]: ...


@dataclass(frozen=True)
class Const(PathExpr):
    carrier: Carrier
    value: Any

    def __post_init__(self) -> None:
        if not self.carrier.aux(self.value, self.value):
            shown = self.carrier.format(self.value)
            raise PathConstructionError(
                f"const({shown}) is not a path on {self.carrier.name}: {shown} is not self-related", (shown,)
            )

    def value_at(self, lam: Fraction) -> Any:
        return self.value

    def left_limit(self, t: Fraction) -> tuple[Any, bool]:
        return self.value, True


@dataclass(frozen=True)
class Scaled(PathExpr):
    """l -> l*a. Scaling by indices is only defined on carriers like Pbar."""

    carrier: Carrier
    value: Any

    def __post_init__(self) -> None:
        if not self.carrier.supports_scaling:
            raise PathConstructionError(f"{self.carrier.name} does not support scaled paths")
        low = self.carrier.scale(Fraction(1, 3), self.value)
        high = self.carrier.scale(Fraction(2, 3), self.value)
        if not self.carrier.aux(low, high):
            shown = self.carrier.format(self.value)
            raise PathConstructionError(
                f"scaled({shown}) is not increasing on {self.carrier.name}",
                (self.carrier.format(low), self.carrier.format(high)),
            )

    def value_at(self, lam: Fraction) -> Any:
        return self.carrier.scale(lam, self.value)

    def left_limit(self, t: Fraction) -> tuple[Any, bool]:
        limit = self.carrier.scale(t, self.value)
        return limit, self.carrier.eq(self.carrier.scale(t / 2, self.value), limit)


@dataclass(frozen=True)
class Stitched(PathExpr):
    """
    Pieces (c_i, p_i) with increasing cuts ending at 1.

    Piece p_i covers [c_(i-1), c_i) and is evaluated at the global index.
    At each cut every earlier value must lie below the first value of the
    next piece; the carrier decides this from the left limit.
    """

    pieces: tuple[tuple[Fraction, PathExpr], ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise PathConstructionError("stitch[] needs at least one piece")
        pieces = tuple((_cut(c), p) for c, p in self.pieces)
        object.__setattr__(self, "pieces", pieces)
        cuts = [c for c, _ in pieces]
        if any(a >= b for a, b in zip(cuts, cuts[1:])):
            raise PathConstructionError("stitch cuts must increase", tuple(format_ext(c) for c in cuts))
        if cuts[-1] != 1:
            raise PathConstructionError(f"the last stitch cut must be 1, got {format_ext(cuts[-1])}")
        carrier = pieces[0][1].carrier
        for _, p in pieces[1:]:
            _require_same_carrier(carrier, p.carrier)
        for (cut, left), (_, right) in zip(pieces, pieces[1:]):
            _check_boundary(carrier, left, right, cut)

    @property
    def carrier(self) -> Carrier:
        return self.pieces[0][1].carrier

    def value_at(self, lam: Fraction) -> Any:
        for cut, path in self.pieces:
            if lam < cut:
                return path.value_at(lam)
        return self.pieces[-1][1].value_at(lam)

    def left_limit(self, t: Fraction) -> tuple[Any, bool]:
        for cut, path in self.pieces:
            if t <= cut:
                return path.left_limit(t)
        return self.pieces[-1][1].left_limit(t)


@dataclass(frozen=True)
class CutDown(PathExpr):
    """The cut-down f_e(l) = f(l - e) for l > e and 0 otherwise."""

    path: PathExpr
    epsilon: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", rational_index(self.epsilon))

    @property
    def carrier(self) -> Carrier:
        return self.path.carrier

    def value_at(self, lam: Fraction) -> Any:
        if lam <= self.epsilon:
            return self.carrier.zero
        return self.path.value_at(lam - self.epsilon)

    def left_limit(self, t: Fraction) -> tuple[Any, bool]:
        if t <= self.epsilon:
            return self.carrier.zero, True
        return self.path.left_limit(t - self.epsilon)


@dataclass(frozen=True)
class Reindexed(PathExpr):
    """
    l -> f(lo + (l - start)(hi - lo)/(stop - start)).

    With start=0 and stop=1 this is the interpolating path between the
    indices lo and hi; path_sup uses the general form for its pieces.
    """

    path: PathExpr
    lo: Fraction
    hi: Fraction
    start: Fraction = Fraction(0)
    stop: Fraction = ONE

    def __post_init__(self) -> None:
        for name in ("lo", "hi", "start", "stop"):
            object.__setattr__(self, name, _exact(getattr(self, name)))
        if not 0 <= self.lo < self.hi <= 1:
            raise PathConstructionError(f"reindexing needs 0 <= lo < hi <= 1, got {self.lo}, {self.hi}")
        if not 0 <= self.start < self.stop <= 1:
            raise PathConstructionError(f"reindexing needs 0 <= start < stop <= 1, got {self.start}, {self.stop}")

    @property
    def carrier(self) -> Carrier:
        return self.path.carrier

    def argument(self, lam: Fraction) -> Fraction:
        return self.lo + (lam - self.start) * (self.hi - self.lo) / (self.stop - self.start)

    def value_at(self, lam: Fraction) -> Any:
        arg = self.argument(lam)
        if arg <= 0:
            return self.carrier.zero
        if arg >= 1:
            raise PreconditionError(f"index {format_ext(lam)} is past the end of this reindexed path")
        return self.path.value_at(arg)

    def left_limit(self, t: Fraction) -> tuple[Any, bool]:
        arg = self.argument(t)
        if arg <= 0:
            return self.carrier.zero, True
        if arg > 1:
            raise PreconditionError(f"index {format_ext(t)} is past the end of this reindexed path")
        return self.path.left_limit(arg)


@dataclass(frozen=True)
class Summed(PathExpr):
    left: PathExpr
    right: PathExpr

    def __post_init__(self) -> None:
        _require_same_carrier(self.left.carrier, self.right.carrier)

    @property
    def carrier(self) -> Carrier:
        return self.left.carrier

    def value_at(self, lam: Fraction) -> Any:
        return self.carrier.add(self.left.value_at(lam), self.right.value_at(lam))

    def left_limit(self, t: Fraction) -> tuple[Any, bool]:
        s = self.carrier
        (e1, a1), (e2, a2) = self.left.left_limit(t), self.right.left_limit(t)
        total = s.add(e1, e2)
        # an attained summand that swallows the other keeps the sum constant
        absorbs_right = a1 and s.eq(s.add(e1, s.zero), total)
        absorbs_left = a2 and s.eq(s.add(s.zero, e2), total)
        return total, (a1 and a2) or absorbs_right or absorbs_left


class Lazy(PathExpr):
    """
    A path given by an evaluator, memoised per index.

    WHAT: The output of dyadic_chain and of infinite suprema
    HOW: Values are computed outside the lock and published with
         setdefault, so concurrent callers agree and never wait on each
         other's evaluator. `hint` is the (endpoint, attained) pair used
         for classification at t = 1; without it the path is unclassified.
    """

    def __init__(
        self,
        carrier: Carrier,
        evaluator: Callable[[Fraction], Any],
        hint: tuple[Any, bool] | None = None,
        description: str = "lazy",
    ):
        self.carrier = carrier
        self.hint = hint
        self.description = description
        self._evaluator = evaluator
        self._cache: dict[Fraction, Any] = {}
        self._lock = threading.Lock()

    def value_at(self, lam: Fraction) -> Any:
        with self._lock:
            if lam in self._cache:
                return self._cache[lam]
        value = self._evaluator(lam)
        with self._lock:
            return self._cache.setdefault(lam, value)

    def left_limit(self, t: Fraction) -> tuple[Any, bool]:
        if t == 1 and self.hint is not None:
            return self.hint
        raise UnsupportedOperationError(f"lazy path {self.description} has no limit information at {format_ext(t)}")

    def evaluated(self) -> dict[Fraction, Any]:
        """Snapshot of every index evaluated so far."""
        with self._lock:
            return dict(self._cache)

    def __repr__(self) -> str:
        return f"Lazy({self.carrier.name!r}, {self.description!r})"


def _require_same_carrier(left: Carrier, right: Carrier) -> None:
    if not left.same_as(right):
        raise PreconditionError(f"carrier mismatch: {left.name} vs {right.name}")


def _grid_below(t: Fraction, denominator: int) -> list[Fraction]:
    return [Fraction(k, denominator) * t for k in range(1, denominator)]


def _check_boundary(carrier: Carrier, left: PathExpr, right: PathExpr, cut: Fraction) -> None:
    start = right.value_at(cut)
    try:
        limit, attained = left.left_limit(cut)
        ok = carrier.dominates_below(limit, attained, start)
    except UnsupportedOperationError:
        denominator = LabSettings().sample_denominator
        grid = _grid_below(cut, denominator)
        limit = left.value_at(grid[-1])
        ok = all(carrier.aux(left.value_at(lam), start) for lam in grid)
        warnings.warn(
            f"stitch boundary at {format_ext(cut)} on {carrier.name} checked on a grid of {denominator - 1} indices only",
            stacklevel=3,
        )
    if not ok:
        raise PathConstructionError(
            f"stitch at {format_ext(cut)}: earlier values are not below {carrier.format(start)}",
            (carrier.format(limit), carrier.format(start)),
        )


def path_eval(p: PathExpr, lam: Any) -> Any:
    """
    Evaluate a path at an index in (0,1).

    Raises:
        PreconditionError: If the index is not an exact rational in (0,1)
    """
    return p.value_at(rational_index(lam))


# ---------------------------------------------------------------------------
# Classification and comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathClass:
    """
    Canonical form of a path class.

    Classified classes compare by (value, attained): the eventual value on
    finite carriers (always attained) or the endpoint on classifiable ones.
    Unclassified classes keep their representative as value, so they only
    compare equal to themselves.
    """

    carrier: Carrier = field(compare=False)
    classified: bool
    value: Any = None
    attained: bool | None = None
    representative: PathExpr | None = field(default=None, compare=False)

    def summary(self) -> PathClassSummary:
        path = format_path(self.representative) if self.representative is not None else "?"
        if not self.classified:
            return PathClassSummary(carrier=self.carrier.name, path=path, classified=False)
        return PathClassSummary(
            carrier=self.carrier.name,
            path=path,
            classified=True,
            value=self.carrier.format(self.value),
            attained=self.attained,
        )


def classify(p: PathExpr) -> PathClass:
    """Classify a path; unclassified unless the carrier is finite or classifiable."""
    carrier = p.carrier
    if carrier.is_finite or carrier.classifiable:
        try:
            value, attained = p.left_limit(ONE)
        except UnsupportedOperationError:
            return PathClass(carrier, False, p, None, p)
        if carrier.is_finite or carrier.eq(value, carrier.zero):
            attained = True
        return PathClass(carrier, True, value, attained, p)
    return PathClass(carrier, False, p, None, p)


def _strictly_below(carrier: Carrier, a: Any, b: Any) -> bool:
    return carrier.leq(a, b) and not carrier.eq(a, b)


def _endpoint_le(carrier: Carrier, f: PathClass, g: PathClass) -> bool:
    if carrier.eq(f.value, carrier.zero) or _strictly_below(carrier, f.value, g.value):
        return True
    return carrier.eq(f.value, g.value) and (bool(g.attained) or not f.attained)


def _sampled_le(p: PathExpr, q: PathExpr, denominator: int) -> bool:
    # q increases, so its largest grid value is the best witness for every l
    top = q.value_at(Fraction(denominator - 1, denominator))
    return all(p.carrier.aux(p.value_at(Fraction(k, denominator)), top) for k in range(1, denominator))


def path_compare(p: PathExpr, q: PathExpr, settings: LabSettings | None = None) -> Comparison:
    """
    Decide [p] <= [q].

    Returns:
        LE/NLE exactly on finite and classifiable carriers. On a
        classifiable carrier [f] <= [g] iff endpoint(f) < endpoint(g), or
        the endpoints agree and (g is attained or f is not). Elsewhere
        UNKNOWN, with the grid verdict reported through warnings.

    Raises:
        PreconditionError: If the paths live on different carriers
    """
    _require_same_carrier(p.carrier, q.carrier)
    carrier = p.carrier
    cp, cq = classify(p), classify(q)
    if cp.classified and cq.classified:
        if carrier.is_finite:
            return Comparison.LE if carrier.aux(cp.value, cq.value) else Comparison.NLE
        return Comparison.LE if _endpoint_le(carrier, cp, cq) else Comparison.NLE
    if p is q or p == q:
        return Comparison.LE
    denominator = (settings or LabSettings()).sample_denominator
    suggestion = "LE" if _sampled_le(p, q, denominator) else "NLE"
    warnings.warn(
        f"{carrier.name} does not classify paths; the grid with denominator {denominator} "
        f"suggests {suggestion}, reporting UNKNOWN",
        stacklevel=2,
    )
    return Comparison.UNKNOWN


def path_waybelow(p: PathExpr, q: PathExpr) -> Decision:
    """
    Decide [p] << [q], i.e. there is m with p(l) < q(m) for every l.

    On classifiable carriers: if q's endpoint is attained, q(m) is that
    endpoint for m near 1 and the carrier's dominates_below decides; if
    not, p must be zero or end strictly below q.
    """
    _require_same_carrier(p.carrier, q.carrier)
    carrier = p.carrier
    cp, cq = classify(p), classify(q)
    if not (cp.classified and cq.classified):
        warnings.warn(f"{carrier.name} does not classify paths; way-below is UNKNOWN", stacklevel=2)
        return Decision.UNKNOWN
    if carrier.is_finite:
        holds = carrier.aux(cp.value, cq.value)
    elif cq.attained:
        holds = carrier.dominates_below(cp.value, bool(cp.attained), cq.value)
    else:
        holds = carrier.eq(cp.value, carrier.zero) or _strictly_below(carrier, cp.value, cq.value)
    return Decision.TRUE if holds else Decision.FALSE


def compare_report(p: PathExpr, q: PathExpr, settings: LabSettings | None = None) -> PathComparisonReport:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return PathComparisonReport(
            carrier=p.carrier.name,
            left=classify(p).summary(),
            right=classify(q).summary(),
            left_le_right=path_compare(p, q, settings),
            right_le_left=path_compare(q, p, settings),
            left_waybelow_right=path_waybelow(p, q),
            right_waybelow_left=path_waybelow(q, p),
        )


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def cut_down(p: PathExpr, epsilon: Any) -> PathExpr:
    """The e-cut-down of p; [p_e] << [p] always holds."""
    if isinstance(p, Const) and p.carrier.eq(p.value, p.carrier.zero):
        return p
    return CutDown(p, rational_index(epsilon))


def interpolate(p: PathExpr, lo: Any, hi: Any) -> PathExpr:
    """
    h(g) = p(g*hi + (1-g)*lo); every value of h lies strictly between
    p(lo) and p(hi) in the auxiliary relation.
    """
    low, high = _exact(lo), _exact(hi)
    if not 0 < low < high <= 1:
        raise PreconditionError(f"interpolation needs 0 < lo < hi <= 1, got {format_ext(low)}, {format_ext(high)}")
    return Reindexed(p, low, high)


def path_add(p: PathExpr, q: PathExpr) -> PathExpr:
    return Summed(p, q)


def step_path(carrier: Carrier, values: Sequence[Any]) -> PathExpr:
    """Equal-width steps through the given values."""
    if not values:
        raise PreconditionError("a step path needs at least one value")
    if len(values) == 1:
        return Const(carrier, values[0])
    m = len(values)
    return Stitched(tuple((Fraction(i + 1, m), Const(carrier, v)) for i, v in enumerate(values)))


def _catch_up(carrier: Carrier, value: Any, g: PathExpr) -> Fraction:
    """The first m = 1 - 2^-k with value < g(m)."""
    for k in range(1, MAX_CATCH_UP + 1):
        mu = 1 - Fraction(1, 2**k)
        if carrier.aux(value, g.value_at(mu)):
            return mu
    raise PathConstructionError(
        f"no index below 1 - 2^-{MAX_CATCH_UP} lifts {carrier.format(value)} into the next path",
        (carrier.format(value),),
    )


def path_sup(paths: Sequence[PathExpr], settings: LabSettings | None = None) -> PathExpr:
    """
    The supremum of an increasing finite list of path classes.

    Args:
        paths: f_1, ..., f_n with [f_1] <= ... <= [f_n]

    Returns:
        A stitched path h. Piece k runs f_k over [lo_k, l_k) on the index
        window [k/(k+1), (k+1)/(k+2)), where lo_k is the first dyadic
        m with f_(k-1)(l_(k-1)) < f_k(m) and l_k = (lo_k + 1)/2; the last
        piece runs f_n up to 1.

    Raises:
        PreconditionError: If the classes are not (provably) increasing
    """
    if not paths:
        raise PreconditionError("path_sup needs at least one path")
    carrier = paths[0].carrier
    for p in paths[1:]:
        _require_same_carrier(carrier, p.carrier)
    for i, (f, g) in enumerate(zip(paths, paths[1:])):
        verdict = path_compare(f, g, settings)
        if verdict is not Comparison.LE:
            raise PreconditionError(f"path_sup needs increasing classes: input {i} vs {i + 1} is {verdict.value}")
    if len(paths) == 1:
        return paths[0]

    pieces: list[tuple[Fraction, PathExpr]] = []
    lo, lam = Fraction(0), Fraction(1, 2)
    last = len(paths) - 1
    for k, f in enumerate(paths):
        start = Fraction(k, k + 1)
        if k == last:
            pieces.append((ONE, Reindexed(f, lo, ONE, start, ONE)))
            break
        stop = Fraction(k + 1, k + 2)
        pieces.append((stop, Reindexed(f, lo, lam, start, stop)))
        lo = _catch_up(carrier, f.value_at(lam), paths[k + 1])
        lam = (lo + 1) / 2
    return Stitched(tuple(pieces))


class _SupBuilder:
    """Index windows of an infinite supremum, extended on demand."""

    def __init__(self, carrier: Carrier, sequence: Callable[[int], PathExpr]):
        self.carrier = carrier
        self.sequence = sequence
        self._terms: list[PathExpr] = []
        self._windows: list[tuple[Fraction, Fraction]] = []
        self._lock = threading.Lock()

    def _window(self, k: int) -> tuple[PathExpr, Fraction, Fraction]:
        with self._lock:
            while len(self._windows) <= k:
                i = len(self._windows)
                term = self.sequence(i + 1)
                if i == 0:
                    lo, hi = Fraction(0), Fraction(1, 2)
                else:
                    previous = self._terms[i - 1]
                    lo = _catch_up(self.carrier, previous.value_at(self._windows[i - 1][1]), term)
                    hi = (lo + 1) / 2
                self._terms.append(term)
                self._windows.append((lo, hi))
            lo, hi = self._windows[k]
            return self._terms[k], lo, hi

    def value_at(self, lam: Fraction) -> Any:
        k = math.floor(lam / (1 - lam))
        term, lo, hi = self._window(k)
        start, stop = Fraction(k, k + 1), Fraction(k + 1, k + 2)
        return term.value_at(lo + (lam - start) * (hi - lo) / (stop - start))


def path_sup_limit(
    sequence: Callable[[int], PathExpr],
    endpoint: Any,
    checked_terms: int = 16,
) -> PathExpr:
    """
    The supremum of an infinite increasing sequence on a classifiable carrier.

    Args:
        sequence: n -> f_n for n >= 1
        endpoint: the supremum of the endpoints of the f_n
        checked_terms: how many leading terms are compared before building

    Returns:
        A lazy path whose class is (endpoint, attained), attained only when
        a checked term already reaches the endpoint with an attained class
    """
    terms = [sequence(n) for n in range(1, checked_terms + 1)]
    carrier = terms[0].carrier
    if not carrier.classifiable:
        raise UnsupportedOperationError(f"{carrier.name} does not classify paths; infinite suprema are unsupported")
    for i, (f, g) in enumerate(zip(terms, terms[1:]), start=1):
        if path_compare(f, g) is not Comparison.LE:
            raise PreconditionError(f"path_sup_limit needs increasing classes: term {i} vs {i + 1}")
    classes = [classify(f) for f in terms]
    for n, c in enumerate(classes, start=1):
        if not carrier.leq(c.value, endpoint):
            raise PreconditionError(
                f"term {n} ends at {carrier.format(c.value)}, above the limit {carrier.format(endpoint)}"
            )
    attained = carrier.eq(endpoint, carrier.zero) or any(
        c.attained and carrier.eq(c.value, endpoint) for c in classes
    )
    builder = _SupBuilder(carrier, sequence)
    return Lazy(carrier, builder.value_at, hint=(endpoint, attained), description=f"sup->{carrier.format(endpoint)}")


# ---------------------------------------------------------------------------
# Back-and-forth isomorphism and the dyadic chain
# ---------------------------------------------------------------------------

DyadicIndex = tuple[int, int]


def _dyadic_enumeration() -> Iterator[DyadicIndex]:
    """(1,1), (2,1), (2,3), (3,1), ...: odd numerators, level by level."""
    for n in itertools.count(1):
        for i in range(1, 2**n, 2):
            yield n, i


def _rational_enumeration() -> Iterator[Fraction]:
    """Rationals in (0,1) by denominator, then numerator; each once."""
    for q in itertools.count(2):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                yield Fraction(p, q)


def _partial_quotients(x: Fraction) -> list[int]:
    """[a1, a2, ...] with x = 1/(a1 + 1/(a2 + ...)) for x in (0,1)."""
    quotients = []
    numerator, denominator = x.numerator, x.denominator
    while numerator:
        a, rest = divmod(denominator, numerator)
        quotients.append(a)
        denominator, numerator = numerator, rest
    return quotients


def _dyadic_index(d: Fraction) -> DyadicIndex:
    return d.denominator.bit_length() - 1, d.numerator


def dyadic_level(rational: Fraction) -> int:
    """Level n of the dyadic i/2^n paired with a rational index."""
    return sum(_partial_quotients(rational)) - 1


def question_mark(rational: Fraction) -> Fraction:
    """
    The dyadic paired with a rational in (0,1).

    For x = [0; a1, a2, ..., ak] this is 2 * sum (-1)^(j+1) 2^-(a1+...+aj),
    so 1/2 -> 1/2, 1/3 -> 1/4 and 2/3 -> 3/4.
    """
    total, depth, sign = Fraction(0), 0, 1
    for a in _partial_quotients(rational):
        depth += a
        total += sign * Fraction(2, 2**depth)
        sign = -sign
    return total


def question_mark_inverse(index: DyadicIndex) -> Fraction:
    """
    The rational paired with i/2^n.

    The binary digits of i/2^n split into runs 0^(a1-1) 1^a2 0^a3 ...,
    which are the partial quotients of the rational.
    """
    n, i = index
    digits = format(i, f"0{n}b")
    runs = [len(list(group)) for _, group in itertools.groupby(digits)]
    quotients = [runs[0] + 1, *runs[1:]] if digits[0] == "0" else [1, *runs]
    value = Fraction(0)
    for a in reversed(quotients):
        value = 1 / (a + value)
    return value


class CantorIsomorphism:
    """
    Back-and-forth order isomorphism between dyadic indices and Q n (0,1).

    WHAT: Pairs (dyadic index, rational), extended one step at a time
    WHY: The dyadic chain is built on dyadics; paths are indexed by rationals
    HOW: Even steps take the next unused dyadic (level order) and give it
         the simplest rational in the matching gap; odd steps do the same
         backwards for the next unused rational (denominator order).
         The simplest element of every gap is the Stern-Brocot node of
         least depth, and depth matches dyadic level, so each step reads
         its partner off the continued fraction instead of searching the
         gap. The map is order-preserving and earlier assignments never
         change.

    USAGE EXAMPLE:
        iso = CantorIsomorphism()
        iso.first(3)   # [((1,1), 1/2), ((2,1), 1/3), ((2,3), 2/3)]
        iso.dyadic_for(Fraction(1, 3))   # 1/4
    """

    def __init__(self) -> None:
        self.pairs: list[tuple[DyadicIndex, Fraction]] = []
        self._used_dyadics: set[DyadicIndex] = set()
        self._used_rationals: set[Fraction] = set()
        self._dyadic_source = _dyadic_enumeration()
        self._rational_source = _rational_enumeration()
        self._lock = threading.Lock()

    def _record(self, index: DyadicIndex, rational: Fraction) -> None:
        self._used_dyadics.add(index)
        self._used_rationals.add(rational)
        self.pairs.append((index, rational))

    def _step(self) -> None:
        if len(self.pairs) % 2 == 0:
            for index in self._dyadic_source:
                if index not in self._used_dyadics:
                    break
            self._record(index, question_mark_inverse(index))
        else:
            for rational in self._rational_source:
                if rational not in self._used_rationals:
                    break
            self._record(_dyadic_index(question_mark(rational)), rational)

    def first(self, k: int) -> list[tuple[DyadicIndex, Fraction]]:
        with self._lock:
            while len(self.pairs) < k:
                self._step()
            return list(self.pairs[:k])

    @staticmethod
    def dyadic_for(rational: Fraction) -> Fraction:
        """The dyadic value paired with a rational index."""
        return question_mark(rational_index(rational))


_CANTOR = CantorIsomorphism()


def cantor_iso(k: int) -> list[tuple[DyadicIndex, Fraction]]:
    """The first k steps of the shared back-and-forth isomorphism."""
    if k < 0:
        raise PreconditionError(f"cantor_iso needs k >= 0, got {k}")
    return _CANTOR.first(k)


Interpolator = Callable[[Any, Any, Any], Any]

_SPINE_CHECK = 16


class DyadicChain:
    """
    Values at the dyadics of (0,1) by midpoint refinement.

    The value at an odd dyadic d = i/2^n comes from its neighbours at
    level n-1: at the rightmost point 1 - 2^-n it is interp(left,
    cofinal(n), a), elsewhere interp(left, left, right). Every produced
    value is checked against the relations it must satisfy. A value at
    level n needs at most two values per coarser level; indices deeper
    than max_level are refused.
    """

    def __init__(
        self,
        carrier: Carrier,
        a: Any,
        cofinal: Callable[[int], Any],
        interp: Interpolator,
        max_level: int,
    ):
        self.carrier = carrier
        self.a = a
        self.cofinal = cofinal
        self.interp = interp
        self.max_level = max_level
        self._values: dict[Fraction, Any] = {}
        self._lock = threading.RLock()

    def at_dyadic(self, d: Fraction) -> Any:
        level = _dyadic_index(d)[0]
        if level > self.max_level:
            raise BoundExceededError(f"dyadic chain values down to level {level}", level, self.max_level)
        with self._lock:
            return self._value(d)

    def _require(self, low: Any, high: Any, d: Fraction) -> None:
        if not self.carrier.aux(low, high):
            s = self.carrier
            raise PathConstructionError(
                f"chain value at {format_ext(d)} breaks the auxiliary relation",
                (s.format(low), s.format(high)),
            )

    def _known(self, d: Fraction) -> bool:
        return d == 0 or d == 1 or d in self._values

    def _lookup(self, d: Fraction) -> Any:
        return self.carrier.zero if d == 0 else self._values[d]

    def _value(self, d: Fraction) -> Any:
        pending = [d]
        while pending:
            current = pending[-1]
            if self._known(current):
                pending.pop()
                continue
            step = Fraction(1, current.denominator)
            missing = [x for x in (current - step, current + step) if not self._known(x)]
            if missing:
                pending.extend(missing)
                continue
            pending.pop()
            self._values[current] = self._refine(current, step)
        return self._lookup(d)

    def _refine(self, d: Fraction, step: Fraction) -> Any:
        left = self._lookup(d - step)
        if d + step == 1:
            bound = self.cofinal(d.denominator.bit_length() - 1)
            value = self.interp(left, bound, self.a)
            self._require(left, value, d)
            self._require(bound, value, d)
            self._require(value, self.a, d)
            return value
        right = self._lookup(d + step)
        value = self.interp(left, left, right)
        self._require(left, value, d)
        self._require(value, right, d)
        return value

    def spine(self, n: int) -> Any:
        return self.at_dyadic(1 - Fraction(1, 2**n))

    def endpoint_hint(self) -> tuple[Any, bool] | None:
        """
        (endpoint, attained) when the oracles settle it, otherwise None.

        On a classifiable carrier every value is below a, so a chain can
        only reach a when a is below itself; then a finite look at the
        spine can confirm attainment but never rule it out.
        """
        s = self.carrier
        if s.is_finite:
            levels = 2 * len(s.elements()) + 2
            return self.spine(levels), True
        if not s.classifiable:
            return None
        spine = [self.spine(n) for n in range(1, _SPINE_CHECK + 1)]
        if any(s.eq(value, self.a) for value in spine):
            return self.a, True
        if not s.aux(self.a, self.a):
            return self.a, False
        return None

    def value_at(self, lam: Fraction) -> Any:
        return self.at_dyadic(_CANTOR.dyadic_for(lam))


def dyadic_chain(
    carrier: Carrier,
    a: Any,
    cofinal: Callable[[int], Any],
    interp: Interpolator | None = None,
    settings: LabSettings | None = None,
) -> PathExpr:
    """
    An increasing path built from a cofinal oracle and an interpolation oracle.

    Args:
        carrier: Where the chain lives
        a: The target element
        cofinal: n -> a_n with a_1 < a_2 < ... < a cofinal below a
        interp: (b1, b2, b) -> c with b1, b2 < c < b; defaults to the
                carrier's interpolate_between
        settings: enumeration_bound caps the dyadic level of an index

    Returns:
        Const(0) for the zero chain, otherwise a Lazy path indexed through
        cantor_iso. On a classifiable carrier the path stays unclassified
        when a is below itself and the first spine values never reach it.

    Raises:
        PathConstructionError: When an oracle returns unrelated elements
        BoundExceededError: When evaluated at an index deeper than the bound
    """
    interp = interp or carrier.interpolate_between
    if carrier.eq(a, carrier.zero) and all(carrier.eq(cofinal(n), carrier.zero) for n in range(1, 9)):
        return Const(carrier, carrier.zero)
    max_level = (settings or LabSettings()).enumeration_bound
    chain = DyadicChain(carrier, a, cofinal, interp, max_level)
    return Lazy(carrier, chain.value_at, hint=chain.endpoint_hint(), description=f"chain->{carrier.format(a)}")


# ---------------------------------------------------------------------------
# Functoriality
# ---------------------------------------------------------------------------


def _check_preserves_aux(
    alpha: Callable[[Any], Any], source: Carrier, target: Carrier, settings: LabSettings
) -> None:
    elements = source.elements() if source.is_finite else source.sample(24, settings.sample_seed)
    if not target.eq(alpha(source.zero), target.zero):
        raise PreconditionError(f"the map sends 0 to {target.format(alpha(source.zero))}")
    for a, b in itertools.product(elements, repeat=2):
        if source.aux(a, b) and not target.aux(alpha(a), alpha(b)):
            raise PreconditionError(
                f"the map does not preserve the auxiliary relation at "
                f"{source.format(a)} < {source.format(b)} (images {target.format(alpha(a))}, {target.format(alpha(b))})"
            )
    if not source.is_finite:
        warnings.warn(f"auxiliary relation preservation on {source.name} checked on samples only", stacklevel=3)


def _map_path(alpha: Callable[[Any], Any], p: PathExpr, target: Carrier) -> PathExpr:
    match p:
        case Const(value=value):
            return Const(target, alpha(value))
        case Scaled(value=value) if target.supports_scaling:
            return Scaled(target, alpha(value))
        case Stitched(pieces=pieces):
            return Stitched(tuple((c, _map_path(alpha, q, target)) for c, q in pieces))
        case CutDown(path=inner, epsilon=epsilon):
            return CutDown(_map_path(alpha, inner, target), epsilon)
        case Reindexed(path=inner, lo=lo, hi=hi, start=start, stop=stop):
            return Reindexed(_map_path(alpha, inner, target), lo, hi, start, stop)
        case Summed(left=left, right=right):
            return Summed(_map_path(alpha, left, target), _map_path(alpha, right, target))
    hint = None
    if isinstance(p, Lazy) and p.hint is not None and p.hint[1]:
        hint = (alpha(p.hint[0]), True)
    return Lazy(target, lambda lam: alpha(p.value_at(lam)), hint=hint, description=f"mapped {format_path(p)}")


def tau_of_morphism(
    alpha: Callable[[Any], Any],
    p: PathExpr,
    target: Carrier,
    settings: LabSettings | None = None,
) -> PathExpr:
    """
    The path alpha o p for a Q-morphism alpha into `target`.

    Preservation of the auxiliary relation is checked exactly on finite
    sources and on samples otherwise.
    """
    _check_preserves_aux(alpha, p.carrier, target, settings or LabSettings())
    return _map_path(alpha, p, target)


# ---------------------------------------------------------------------------
# Brute-force tau oracle for finite Q-semigroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StepPathTau:
    """Classes of step paths: the carrier, each class's first tuple, and the tuple list."""

    cu: FiniteQSemigroup
    representatives: tuple[tuple[int, ...], ...]
    tuples: tuple[tuple[int, ...], ...]
    classes: tuple[int, ...]


def step_path_tau(
    s: FiniteQSemigroup, max_breakpoints: int = 3, settings: LabSettings | None = None
) -> StepPathTau:
    """
    tau(s) computed from step paths with up to `max_breakpoints` cuts.

    A step path with m equal pieces is a tuple (v_1, ..., v_m) with
    v_i < v_j for all i <= j. Then

        f <~ g   iff  for all i there is j with v_i < w_j
        f << g   iff  there is j with v_i < w_j for all i

    and the sum is taken pointwise.

    Raises:
        BoundExceededError: If the number of candidate tuples exceeds the bound
    """
    if max_breakpoints < 0:
        raise PreconditionError("max_breakpoints must be nonnegative")
    settings = settings or LabSettings()
    m = max_breakpoints + 1
    aux = s.aux_table
    self_related = [a for a in s.elements() if s.aux(a, a)]
    estimate = len(self_related) ** m
    if estimate > settings.enumeration_bound:
        raise BoundExceededError(f"step paths on {s.name}", estimate, settings.enumeration_bound)

    grid = np.array(list(itertools.product(self_related, repeat=m)), dtype=np.int64).reshape(-1, m)
    increasing = np.ones(len(grid), dtype=bool)
    for i in range(m):
        for j in range(i, m):
            increasing &= aux[grid[:, i], grid[:, j]]
    steps = grid[increasing]

    related = aux[steps[:, None, :, None], steps[None, :, None, :]]  # [f, g, i, j]
    precedes = related.any(axis=3).all(axis=2)
    way = related.all(axis=2).any(axis=2)
    equivalent = precedes & precedes.T

    class_of = np.full(len(steps), -1, dtype=np.int64)
    reps: list[int] = []
    for f in range(len(steps)):
        if class_of[f] < 0:
            class_of[equivalent[f] & (class_of < 0)] = len(reps)
            reps.append(f)

    rows = [tuple(int(v) for v in row) for row in steps]
    lookup = {row: i for i, row in enumerate(rows)}
    add = [
        [int(class_of[lookup[tuple(s.add(x, y) for x, y in zip(rows[c], rows[d]))]]) for d in reps]
        for c in reps
    ]
    labels = ["(" + ",".join(s.labels_of(rows[r])) + ")" for r in reps]
    zero_class = int(class_of[lookup[(s.zero,) * m]])
    cu = FiniteQSemigroup(
        f"steps({s.name})",
        labels,
        labels[zero_class],
        add,
        precedes[np.ix_(reps, reps)],
        way[np.ix_(reps, reps)],
        validate=False,
    )
    return StepPathTau(
        cu=cu,
        representatives=tuple(rows[r] for r in reps),
        tuples=tuple(rows),
        classes=tuple(int(c) for c in class_of),
    )


# ---------------------------------------------------------------------------
# Textual syntax
# ---------------------------------------------------------------------------


def _call(token: str, head: str) -> str | None:
    if token.startswith(head + "(") and token.endswith(")"):
        return token[len(head) + 1 : -1]
    return None


def _args(inner: str, count: int, head: str) -> list[str]:
    parts = split_top_level(inner)
    if len(parts) != count:
        raise StructureError(f"{head}(...) takes {count} arguments, got {len(parts)}")
    return parts


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise StructureError(f"{text!r} is not a rational number") from None


def parse_path(text: str, carrier: Carrier) -> PathExpr:
    """
    Parse const(a), scaled(a), cut(p,e), interp(p,lo,hi), add(p,q) and
    stitch[(c,p),...]; elements use the carrier's own syntax.

    Raises:
        StructureError: On malformed syntax
        PathConstructionError: If the parsed expression is not a path
    """
    token = text.strip()
    if (inner := _call(token, "const")) is not None:
        return Const(carrier, carrier.parse(inner))
    if (inner := _call(token, "scaled")) is not None:
        return Scaled(carrier, carrier.parse(inner))
    if (inner := _call(token, "cut")) is not None:
        path, epsilon = _args(inner, 2, "cut")
        return CutDown(parse_path(path, carrier), _fraction(epsilon))
    if (inner := _call(token, "interp")) is not None:
        path, lo, hi = _args(inner, 3, "interp")
        return interpolate(parse_path(path, carrier), _fraction(lo), _fraction(hi))
    if (inner := _call(token, "reindex")) is not None:
        path, lo, hi, start, stop = _args(inner, 5, "reindex")
        return Reindexed(parse_path(path, carrier), *(_fraction(v) for v in (lo, hi, start, stop)))
    if (inner := _call(token, "add")) is not None:
        left, right = _args(inner, 2, "add")
        return Summed(parse_path(left, carrier), parse_path(right, carrier))
    if token.startswith("stitch[") and token.endswith("]"):
        pieces = []
        for piece in split_top_level(token[len("stitch[") : -1]):
            if not (piece.startswith("(") and piece.endswith(")")):
                raise StructureError(f"stitch pieces look like (cut,path), got {piece!r}")
            cut, path = _args(piece[1:-1], 2, "stitch piece")
            pieces.append((_fraction(cut), parse_path(path, carrier)))
        return Stitched(tuple(pieces))
    raise StructureError(f"cannot parse path {text!r}; use const(a), scaled(a), cut(p,e), stitch[(c,p),...]")


def format_path(p: PathExpr) -> str:
    match p:
        case Const(carrier=carrier, value=value):
            return f"const({carrier.format(value)})"
        case Scaled(carrier=carrier, value=value):
            return f"scaled({carrier.format(value)})"
        case Stitched(pieces=pieces):
            return "stitch[" + ",".join(f"({format_ext(c)},{format_path(q)})" for c, q in pieces) + "]"
        case CutDown(path=inner, epsilon=epsilon):
            return f"cut({format_path(inner)},{format_ext(epsilon)})"
        case Reindexed(path=inner, lo=lo, hi=hi, start=start, stop=stop):
            if start == 0 and stop == 1:
                return f"interp({format_path(inner)},{format_ext(lo)},{format_ext(hi)})"
            bounds = ",".join(format_ext(v) for v in (lo, hi, start, stop))
            return f"reindex({format_path(inner)},{bounds})"
        case Summed(left=left, right=right):
            return f"add({format_path(left)},{format_path(right)})"
        case Lazy(description=description):
            return f"lazy({description})"
    raise TypeError(f"not a path expression: {p!r}")


__all__ = [
    "PathExpr",
    "Const",
    "Scaled",
    "Stitched",
    "CutDown",
    "Reindexed",
    "Summed",
    "Lazy",
    "PathClass",
    "StepPathTau",
    "CantorIsomorphism",
    "DyadicChain",
    "rational_index",
    "path_eval",
    "classify",
    "path_compare",
    "path_waybelow",
    "compare_report",
    "cut_down",
    "interpolate",
    "path_add",
    "step_path",
    "path_sup",
    "path_sup_limit",
    "cantor_iso",
    "question_mark",
    "question_mark_inverse",
    "dyadic_level",
    "dyadic_chain",
    "tau_of_morphism",
    "step_path_tau",
    "parse_path",
    "format_path",
]
