"""Elements p + q*sqrt(a) of a quadratic extension of Q.

The radicand a is a fixed nonsquare rational (checked on construction), so
every element lives in an honest degree-2 field.  Elements are immutable;
arithmetic is exact.  Mixed arithmetic with plain rationals/ints promotes the
rational operand; elements with different radicands never mix.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .rationals import format_rat, is_square, rat

Scalar = Union[int, Fraction, "QuadElem"]


@lru_cache(maxsize=64)
def _check_radicand(radicand: Fraction) -> None:
    # Arithmetic constructs elements with the same few radicands over and
    # over, so the nonsquare check is cached.
    if is_square(radicand) is not None:
        raise ValueError(f"radicand {radicand} is a rational square")


class QuadElem:
    """Immutable element of Q(sqrt(a)) for a fixed nonsquare rational a."""

    __slots__ = ("base", "coef", "radicand")

    def __init__(self, base, coef, radicand):
        base = rat(base)
        coef = rat(coef)
        radicand = rat(radicand)
        _check_radicand(radicand)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("QuadElem is immutable")

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.radicand != self.radicand:
                raise ValueError(
                    f"mixed radicands {self.radicand} and {other.radicand}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.radicand)
        return NotImplemented  # type: ignore[return-value]

    @property
    def is_rational(self) -> bool:
        return self.coef == 0

    def __bool__(self) -> bool:
        return self.base != 0 or self.coef != 0

    # -- ring/field operations ---------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.base + o.base, self.coef + o.coef, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.base, -self.coef, self.radicand)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.base - o.base, self.coef - o.coef, self.radicand)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a = self.radicand
        return QuadElem(
            self.base * o.base + a * self.coef * o.coef,
            self.base * o.coef + self.coef * o.base,
            a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadElem":
        """p + q*sqrt(a)  ->  p - q*sqrt(a)."""
        return QuadElem(self.base, -self.coef, self.radicand)

    def norm(self) -> Fraction:
        """Field norm p**2 - a*q**2 (zero only for the zero element)."""
        return self.base * self.base - self.radicand * self.coef * self.coef

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quadratic element")
        return QuadElem(self.base / n, -self.coef / n, self.radicand)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem(1, 0, self.radicand)
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            if other.radicand != self.radicand:
                # Equal only when both are the same plain rational.
                return self.coef == 0 and other.coef == 0 and self.base == other.base
            return self.base == other.base and self.coef == other.coef
        if isinstance(other, (int, Fraction)):
            return self.coef == 0 and self.base == other
        return NotImplemented

    def __hash__(self):
        if self.coef == 0:
            return hash(self.base)
        return hash((self.base, self.coef, self.radicand))

    def __repr__(self) -> str:
        return f"QuadElem({self.base!r}, {self.coef!r}, {self.radicand!r})"

    def __str__(self) -> str:
        return f"{format_rat(self.base)}+{format_rat(self.coef)}*sqrt({format_rat(self.radicand)})"


def sqrt_of(a) -> QuadElem:
    """The element sqrt(a) of Q(sqrt(a))."""
    return QuadElem(0, 1, a)


def demote(c: Scalar) -> Union[Fraction, QuadElem]:
    """Canonical scalar: QuadElems with zero sqrt part become plain Fractions."""
    if isinstance(c, QuadElem):
        if c.coef == 0:
            return c.base
        return c
    return rat(c)


def conjugate_scalar(c: Scalar) -> Union[Fraction, QuadElem]:
    if isinstance(c, QuadElem):
        return c.conjugate()
    return rat(c)
