"""Exact rational scalars.

All classification decisions in this package are made over ``fractions.Fraction``
(arbitrary precision, canonical reduced form with positive denominator).
Floating point enters only in the mesher. This module owns the strict
string format used at every exactness boundary: a scalar is rendered as
``"p"`` or ``"p/q"`` and parsed back from exactly that shape; decimal or
exponent notation is rejected.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import VectorFormatError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_scalar(text: str | int) -> Fraction:
    """Parse a decimal-integer or ``p/q`` string into an exact rational.

    Plain ints are accepted as-is; anything float-shaped raises
    :class:`VectorFormatError`.
    """
    if isinstance(text, bool):
        raise VectorFormatError(f"not an exact rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _SCALAR_RE.match(text.strip()):
        raise VectorFormatError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise VectorFormatError(f"zero denominator: {text!r}") from None


def format_scalar(x: Fraction) -> str:
    """Render a rational in the canonical ``p`` / ``p/q`` form."""
    return str(x)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of ``x >= 0``, or None when it is irrational."""
    if x < 0:
        raise ValueError("rational_sqrt of a negative value")
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def is_perfect_square(x: Fraction) -> bool:
    return x >= 0 and rational_sqrt(x) is not None
