"""Exact text rendering of rationals: reduced fractions and correctly rounded decimals."""

from __future__ import annotations

from fractions import Fraction


def format_rational(value) -> str:
    """Reduced `num/den` with positive denominator; integers print bare."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational; accepts `num` or `num/den`."""
    return Fraction(text.strip())


def format_decimal(value, digits: int) -> str:
    """Decimal expansion with `digits` fractional digits, rounded half-even.

    The rounding is done on integers (no floating point), so the result is
    the correctly rounded value of the exact input.
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    f = Fraction(value)
    negative = f < 0
    if negative:
        f = -f
    scale = 10**digits
    quot, rem = divmod(f.numerator * scale, f.denominator)
    double = 2 * rem
    if double > f.denominator or (double == f.denominator and quot % 2 == 1):
        quot += 1
    int_part, frac_part = divmod(quot, scale)
    sign = "-" if negative and quot != 0 else ""
    return f"{sign}{int_part}.{frac_part:0{digits}d}"
