"""Small exact-arithmetic helpers shared across the package.

Everything downstream works over ``fractions.Fraction``; floats are rejected
at the boundary so rounding error can never leak into a certificate.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction | int | str


def as_fraction(value: Rational | Fraction) -> Fraction:
    """Coerce ints, Fractions and strings like '94/3' to Fraction.

    Floats are refused on purpose: all public entry points promise exact
    rational arithmetic.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def frac_str(value: Fraction) -> str:
    """Canonical string form: '2', '-1', '14/3'."""
    return str(Fraction(value))


def floor_sqrt(n: int) -> int:
    """floor(sqrt(n)) for a nonnegative integer."""
    if n < 0:
        raise ValueError("floor_sqrt of a negative integer")
    return math.isqrt(n)


def ceil_sqrt_fraction(n: int, denominator: int) -> Fraction:
    """Smallest multiple of 1/denominator that is >= sqrt(n), exactly.

    Used to store irrational symmetric nef thresholds (1 + sqrt(g+1)) as a
    sound rational over-approximation: p/denominator >= sqrt(n) iff
    p >= sqrt(n * denominator^2), so p = ceil(isqrt-style root).
    """
    if n < 0:
        raise ValueError("square root of a negative integer")
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    s = math.isqrt(n * denominator * denominator)
    if s * s < n * denominator * denominator:
        s += 1
    return Fraction(s, denominator)
