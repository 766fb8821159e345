"""Rational scalars.

Coefficients are ``int`` when integral and :class:`fractions.Fraction`
otherwise; the two mix freely and hash consistently, and keeping integers
as ``int`` is much faster in the hot loops.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Union[int, Fraction]


def q(value) -> Rational:
    """Coerce to a reduced rational, demoting integral fractions to int."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return q(Fraction(value.strip()))
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    return q(Fraction(value))


def qdiv(a: Rational, b: Rational) -> Rational:
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return q(Fraction(a) / b)


def to_str(value: Rational) -> str:
    """Serialize as ``"p/q"`` or ``"p"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse(text) -> Rational:
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return q(text)
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {text!r}")
    return q(Fraction(text))


def sign(value: Rational) -> int:
    return (value > 0) - (value < 0)


def rational_sqrt(value: Rational) -> Rational | None:
    """Exact square root if ``value`` is the square of a rational, else None."""
    if value < 0:
        return None
    value = Fraction(value)
    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return q(Fraction(rn, rd))
    return None


def sqrt_bounds(value: Rational, bits: int) -> tuple[Rational, Rational]:
    """Rational ``lo <= sqrt(value) <= hi`` with ``hi - lo <= 2**-bits``."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    exact = rational_sqrt(value)
    if exact is not None:
        return exact, exact
    scale = 1 << bits
    value = Fraction(value)
    # floor(sqrt(value) * scale) from integer arithmetic
    lo_int = isqrt(value.numerator * scale * scale // value.denominator)
    return q(Fraction(lo_int, scale)), q(Fraction(lo_int + 1, scale))
