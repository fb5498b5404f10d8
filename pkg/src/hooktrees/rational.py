"""Exact rational scalars and their wire format.

The coefficient field everywhere in this package is the arbitrary-precision
rational.  ``fractions.Fraction`` already is exactly that (always in lowest
terms, positive denominator, exact arithmetic), so it is used directly.
Rationals travel as strings: ``"p/q"`` in lowest terms, or plain ``"p"``
when the denominator is 1.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational_to_string(value: Fraction) -> str:
    """Format ``value`` as ``"p"`` or ``"p/q"``, lowest terms."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_string(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; rejects decimals and other notation."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r} (use p or p/q)")
    return Fraction(text)


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction, rejecting floats (exactness contract)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


def integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, by integer Newton iteration."""
    if n < 0 or k < 1:
        raise ValueError("integer_root needs n >= 0 and k >= 1")
    if n in (0, 1) or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x


def rational_root(value: Fraction, k: int) -> Fraction | None:
    """Exact k-th root of a rational, or None when it is irrational.

    Negative values admit a root only for odd k.
    """
    if k < 1:
        raise ValueError("root index must be positive")
    sign = 1
    if value < 0:
        if k % 2 == 0:
            return None
        sign = -1
        value = -value
    num = integer_root(value.numerator, k)
    den = integer_root(value.denominator, k)
    if num ** k != value.numerator or den ** k != value.denominator:
        return None
    return Fraction(sign * num, den)
