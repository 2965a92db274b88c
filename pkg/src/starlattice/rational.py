"""Exact rational scalars and their canonical "p/q" string form.

Every verification path in the package computes over `fractions.Fraction`,
which already guarantees the canonical invariants (positive denominator,
reduced to lowest terms). Floats are rejected at the boundary so that no
inexact value can leak into an exact computation.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import RationalParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (q > 0) into an exact rational."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise RationalParseError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise RationalParseError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p/q", or "p" alone when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_float(value: float) -> str:
    """17-significant-digit decimal, enough to round-trip a double."""
    return f"{value:.17g}"
