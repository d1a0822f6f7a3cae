"""Shared helpers for the test suite.

Everything random is seeded per test; sampling helpers evaluate rational maps
at exact rational arguments so every check is an equality of Fractions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, Optional

from conicert import RatFunc, SurfaceSpec, is_square
from conicert.surface import SurfaceSpec as _SurfaceSpec


def rand_fraction(rng: random.Random, max_num: int = 9, max_den: int = 4) -> Fraction:
    num = rng.randint(-max_num, max_num)
    den = rng.randint(1, max_den)
    return Fraction(num, den)


def rand_nonsquare(rng: random.Random, max_num: int = 9, max_den: int = 4) -> Fraction:
    while True:
        a = rand_fraction(rng, max_num, max_den)
        if a != 0 and is_square(a) is None:
            return a


def rand_spec(rng: random.Random) -> SurfaceSpec:
    """A random valid spec: nonsquare a, nonzero b, (c, d) != (0, 0)."""
    a = rand_nonsquare(rng)
    while True:
        b = rand_fraction(rng)
        if b != 0:
            break
    while True:
        c = rand_fraction(rng)
        d = rand_fraction(rng)
        if c != 0 or d != 0:
            return _SurfaceSpec(a, b, c, d)


def eval_at(f: RatFunc, point: Dict[str, Fraction]) -> Optional[Fraction]:
    """Exact value of f at a rational point, or None on a pole."""
    bindings = {name: RatFunc.const(value) for name, value in point.items()}
    for v in f.variables():
        bindings.setdefault(v, RatFunc.const(0))
    try:
        out = f.substitute(bindings)
    except ZeroDivisionError:
        return None
    assert out.is_const()
    value = out.const_value()
    assert isinstance(value, Fraction)
    return value


def assert_maps_sweep_surface(spec: SurfaceSpec, maps: Dict[str, RatFunc]) -> None:
    """Independent re-check that the maps satisfy both defining relations.

    Symbolic: the relations must vanish identically as rational functions.
    Numeric: spot samples at exact rational parameter values must land on the
    surface (skipping poles).
    """
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    t1, t2, t3, t4 = maps["t1"], maps["t2"], maps["t3"], maps["t4"]
    rel1 = t1 * t1 - RatFunc.const(a) * t2 * t2 - RatFunc.const(b)
    assert rel1.is_zero
    rel2 = (
        t3 * t3
        - RatFunc.const(a) * t4 * t4
        - RatFunc.const(2 * c) * t1
        - RatFunc.const(d)
    )
    assert rel2.is_zero
    for m in maps.values():
        assert m.conjugate() == m, "maps must have rational coefficients"
    samples = [
        (Fraction(1, 3), Fraction(2)),
        (Fraction(-2), Fraction(5, 7)),
        (Fraction(4, 5), Fraction(-1, 2)),
    ]
    landed = 0
    for u0, v0 in samples:
        point = {"u": u0, "v": v0}
        values = {name: eval_at(m, point) for name, m in maps.items()}
        if any(value is None for value in values.values()):
            continue
        landed += 1
        v1, v2, v3, v4 = (values[n] for n in ("t1", "t2", "t3", "t4"))
        assert v1 * v1 - a * v2 * v2 == b
        assert v3 * v3 - a * v4 * v4 == 2 * c * v1 + d
    assert landed >= 1
