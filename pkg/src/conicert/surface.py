"""Surface specs: the parameter quadruple (a, b, c, d).

The surface lives in A^4 with coordinates t1..t4 and relations
t1^2 - a*t2^2 = b  and  t3^2 - a*t4^2 = 2*c*t1 + d.  Hypotheses: a is a
rational nonsquare, b != 0, and c, d are not both zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidSpecError
from .rationals import format_rat, is_square, rat


@dataclass(frozen=True)
class SurfaceSpec:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        a, b, c, d = (rat(v) for v in (self.a, self.b, self.c, self.d))
        if is_square(a) is not None:
            raise InvalidSpecError(f"a = {format_rat(a)} must be a rational nonsquare")
        if b == 0:
            raise InvalidSpecError("b must be nonzero")
        if c == 0 and d == 0:
            raise InvalidSpecError("c and d must not both be zero")
        for name, value in (("a", a), ("b", b), ("c", c), ("d", d)):
            object.__setattr__(self, name, value)

    @property
    def b_square_root(self) -> Optional[Fraction]:
        """Nonnegative rational square root of b, if b is a square."""
        return is_square(self.b)

    def to_json(self) -> dict:
        return {
            "a": format_rat(self.a),
            "b": format_rat(self.b),
            "c": format_rat(self.c),
            "d": format_rat(self.d),
        }

    def __str__(self) -> str:
        return (
            f"(a,b,c,d)=({format_rat(self.a)},{format_rat(self.b)},"
            f"{format_rat(self.c)},{format_rat(self.d)})"
        )
