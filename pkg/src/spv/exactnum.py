"""Exact integer and rational primitives.

``Rational`` is :class:`fractions.Fraction`: arbitrary-precision, always
stored in lowest terms with a positive denominator, and zero is ``0/1``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import ZeroToNegativePower

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "binomial",
    "factorial",
    "format_rational",
    "parse_rational",
    "rational_pow",
]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Rational.

    Floats are rejected: silently converting them would smuggle rounding
    error into exact checks.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"-p"`` or ``"p/q"`` (no decimals, no exponents)."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(r: Fraction) -> str:
    """Canonical ``"p/q"`` string; the denominator is always written."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def binomial(n: int, k: int) -> int:
    """C(n, k) for non-negative integers; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    if k > n:
        return 0
    k = min(k, n - k)
    c = 1
    # c stays integral: after step i it equals C(n - k + i, i)
    for i in range(1, k + 1):
        c = c * (n - k + i) // i
    return c


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


def rational_pow(base, exp: int) -> Fraction:
    """Exact integer power, with 0**0 == 1."""
    base = as_rational(base)
    if base == 0 and exp < 0:
        raise ZeroToNegativePower(f"0 raised to negative power {exp}")
    return base**exp
