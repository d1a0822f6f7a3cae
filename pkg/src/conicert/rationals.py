"""Exact rational scalars.

Rationals are `fractions.Fraction` throughout: arbitrary precision, always
canonical (positive denominator, reduced), with exact +,-,*,/ from the stdlib.
This module adds the number-theoretic predicates and the wire format used by
the CLI ("p/q", or "p" when the denominator is 1).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Union

Rat = Union[int, Fraction]


def rat(value: Union[int, str, Fraction]) -> Fraction:
    """Parse a rational from an int, a Fraction, or a "p/q" / "p" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value).strip())


def format_rat(q: Fraction) -> str:
    """Serialize as "p/q", or "p" for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def int_sqrt_exact(n: int) -> Optional[int]:
    """Return the nonnegative integer square root of n if n is a perfect square."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def is_square(q: Rat) -> Optional[Fraction]:
    """Return a nonnegative r with r**2 == q when q is a rational square.

    A reduced p/q is a square iff p*q is a square integer (then
    sqrt(p/q) = sqrt(p*q)/q).  This avoids factoring.
    """
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    if q < 0:
        return None
    root = int_sqrt_exact(q.numerator * q.denominator)
    if root is None:
        return None
    return Fraction(root, q.denominator)


def squarefree_kernel_int(q: Rat) -> int:
    """Integer with the same square class as the rational q (0 stays 0).

    For reduced p/q this is p*q: q = (p*q) * (1/q)**2.
    """
    q = Fraction(q)
    return q.numerator * q.denominator
