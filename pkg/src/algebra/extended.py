"""
Exact arithmetic on the extended nonnegative rationals [0, inf].

Finite values are fractions.Fraction (integers are accepted and promoted),
infinity is math.inf. Multiplication follows the measure-theory convention
0 * inf = 0, which is the convention of every Cu-semiring in the catalog.
"""

import math
from fractions import Fraction

INF = math.inf

ExtRational = Fraction | float
ExtNatural = int | float


def is_inf(value: object) -> bool:
    return isinstance(value, float) and math.isinf(value) and value > 0


def to_ext(value: object) -> ExtRational:
    """
    Normalize an int, Fraction, float infinity or string into an extended rational.

    Raises:
        ValueError: On negative, NaN or non-exact finite floats
    """
    if isinstance(value, str):
        return parse_ext(value)
    if isinstance(value, bool):
        raise ValueError(f"Not an extended rational: {value!r}")
    if isinstance(value, float):
        if is_inf(value):
            return INF
        raise ValueError(f"Finite floats are not exact; use a Fraction instead of {value!r}")
    if isinstance(value, (int, Fraction)):
        result = Fraction(value)
        if result < 0:
            raise ValueError(f"Extended rationals are nonnegative, got {value}")
        return result
    raise ValueError(f"Not an extended rational: {value!r}")


def parse_ext(text: str) -> ExtRational:
    """Parse '3', '3/2', 'inf' or '∞'."""
    token = text.strip().lower()
    if token in ("inf", "∞", "infinity"):
        return INF
    try:
        result = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Cannot parse {text!r} as a nonnegative rational or 'inf'") from None
    if result < 0:
        raise ValueError(f"Extended rationals are nonnegative, got {text!r}")
    return result


def format_ext(value: ExtRational | int) -> str:
    if is_inf(value):
        return "inf"
    fraction = Fraction(value)
    if fraction.denominator == 1:
        return str(fraction.numerator)
    return f"{fraction.numerator}/{fraction.denominator}"


def ext_add(a: ExtRational, b: ExtRational) -> ExtRational:
    if is_inf(a) or is_inf(b):
        return INF
    return a + b


def ext_mul(a: ExtRational, b: ExtRational) -> ExtRational:
    if a == 0 or b == 0:
        return Fraction(0)
    if is_inf(a) or is_inf(b):
        return INF
    return a * b


def nat_add(a: ExtNatural, b: ExtNatural) -> ExtNatural:
    if is_inf(a) or is_inf(b):
        return INF
    return int(a) + int(b)


def nat_mul(a: ExtNatural, b: ExtNatural) -> ExtNatural:
    if a == 0 or b == 0:
        return 0
    if is_inf(a) or is_inf(b):
        return INF
    return int(a) * int(b)


def parse_nat(text: str) -> ExtNatural:
    token = text.strip().lower()
    if token in ("inf", "∞", "infinity"):
        return INF
    if not token.isdigit():
        raise ValueError(f"Cannot parse {text!r} as a natural number or 'inf'")
    return int(token)


def prime_factors(n: int) -> frozenset[int]:
    """Prime divisors of a positive integer by trial division."""
    factors: set[int] = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1
    if n > 1:
        factors.add(n)
    return frozenset(factors)


def rational_grid(denominator: int) -> list[Fraction]:
    """All rationals in (0,1) with denominator at most `denominator`, sorted."""
    values = {
        Fraction(num, den)
        for den in range(2, denominator + 1)
        for num in range(1, den)
    }
    return sorted(values)
