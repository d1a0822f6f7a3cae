"""Constructive rational points: norm equations, quadric points, parametrizations.

solve_norm_equation decides x^2 - a*y^2 = b constructively: the Hilbert symbol
answers solvability, descent on the ternary form X^2 - a*Y^2 - b*Z^2 produces
a point, and a bounded exhaustive search backs the descent up.  Every returned
object is re-verified exactly before it leaves this module, and stereographic
parametrizations are additionally round-trip checked symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Callable, Dict, Optional, Sequence, Tuple

from sympy import symbols as _sympy_symbols
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

from .config import DEFAULT_BUDGETS, SearchBudgets
from .errors import DegenerateCenterError, SearchBudgetError, VerificationError
from .hilbert import global_hilbert
from .multipoly import MultiPoly, RatFunc
from .rationals import Rat, is_square, rat

CancelCheck = Optional[Callable[[], bool]]


def _poll(cancel: CancelCheck) -> None:
    if cancel is not None and cancel():
        raise SearchBudgetError("search cancelled by caller")


@dataclass(frozen=True)
class ConicSolution:
    """(alpha, beta) with alpha^2 - a*beta^2 = b for the (a, b) it was built for."""

    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class QuadricSpec:
    """Diagonal projective quadric q1*X^2 + q2*Y^2 + q3*Z^2 + q4*W^2 = 0."""

    coeffs: Tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        coeffs = tuple(rat(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if any(c == 0 for c in coeffs):
            raise ValueError("quadric coefficients must be nonzero")
        if all(c > 0 for c in coeffs) or all(c < 0 for c in coeffs):
            raise ValueError("definite quadric has no nontrivial real point")

    def integer_coeffs(self) -> Tuple[int, int, int, int]:
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        return tuple(int(c * lcm) for c in self.coeffs)  # type: ignore[return-value]

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((c * rat(x) ** 2 for c, x in zip(self.coeffs, point)), Fraction(0))


@dataclass(frozen=True)
class SurfaceParam:
    """Two-parameter rational maps onto a surface, one per affine coordinate.

    maps is an ordered name -> RatFunc dict in the two parameters; base_point
    is the projection center when the construction used one.
    """

    maps: Dict[str, RatFunc]
    base_point: Optional[Tuple[int, int, int, int]]
    params: Tuple[str, str] = ("u", "v")

    def map_tuple(self) -> Tuple[RatFunc, ...]:
        return tuple(self.maps.values())

    def to_json(self) -> dict:
        return {
            "params": list(self.params),
            "maps": {name: str(m) for name, m in self.maps.items()},
            "base_point": None if self.base_point is None else list(self.base_point),
        }


# -- norm equations -----------------------------------------------------------------


def solve_norm_equation(
    a: Rat,
    b: Rat,
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
) -> Optional[ConicSolution]:
    """Solve alpha^2 - a*beta^2 = b over Q, or return None when unsolvable.

    Solvability is decided by the global Hilbert symbol (a, b); the point
    itself comes from descent on X^2 - a*Y^2 - b*Z^2 with a bounded exhaustive
    fallback.  Deterministic for fixed inputs.
    """
    a = rat(a)
    b = rat(b)
    if a == 0 or b == 0:
        raise ValueError("norm equation requires nonzero a, b")
    if is_square(a) is not None:
        raise ValueError("norm-form coefficient a must be a nonsquare")
    if not global_hilbert(a, b).is_empty:
        return None
    A = a.numerator * a.denominator
    B = b.numerator * b.denominator
    triple = _isotropic_ternary(A, B, budgets, cancel)
    if triple is None:
        raise SearchBudgetError(
            f"norm equation x^2 - {a}*y^2 = {b} is solvable but the search budget ran out"
        )
    x0, y0, z0 = triple
    # z0 != 0 because A is a nonsquare.
    alpha = Fraction(x0, z0) / b.denominator
    beta = Fraction(y0, z0) * a.denominator / b.denominator
    if alpha * alpha - a * beta * beta != b:
        raise VerificationError("norm-equation solution failed its exact re-check")
    return ConicSolution(alpha=alpha, beta=beta)


def _isotropic_ternary(
    A: int, B: int, budgets: SearchBudgets, cancel: CancelCheck
) -> Optional[Tuple[int, int, int]]:
    """Primitive integer zero of X^2 - A*Y^2 - B*Z^2 (Legendre-style descent)."""
    _poll(cancel)
    x, y, z = _sympy_symbols("x y z", integer=True)
    sol = diop_ternary_quadratic(x**2 - A * y**2 - B * z**2)
    if sol is not None and sol[0] is not None and any(sol):
        x0, y0, z0 = (int(v) for v in sol)
        if x0 * x0 - A * y0 * y0 - B * z0 * z0 == 0 and z0 != 0:
            return _primitive((x0, y0, z0))  # type: ignore[return-value]
    # Exhaustive fallback, height-ordered.
    for h in range(1, budgets.fallback_height + 1):
        _poll(cancel)
        for z0 in range(1, h + 1):
            for y0 in range(0, h + 1):
                if max(y0, z0) != h and h > 1:
                    continue
                v = A * y0 * y0 + B * z0 * z0
                if v < 0:
                    continue
                r = isqrt(v)
                if r * r == v:
                    return _primitive((r, y0, z0))  # type: ignore[return-value]
    return None


def _primitive(vec: Tuple[int, ...]) -> Tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    vec = tuple(x // g for x in vec)
    for x in vec:
        if x != 0:
            return vec if x > 0 else tuple(-y for y in vec)
    raise ValueError("zero vector")


# -- quadric point search --------------------------------------------------------------


_SIEVE_MODULI = (8, 9, 5, 7)


def find_quadric_point(
    q: QuadricSpec,
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
) -> Optional[Tuple[int, int, int, int]]:
    """First primitive integer zero of the quadric in (height, lex) order.

    Height-ordered search with residue sieves mod 8, 9, 5, 7 before the exact
    check.  Raises SearchBudgetError when the height budget is exhausted.
    """
    qi = q.integer_coeffs()
    sieves = []
    for m in _SIEVE_MODULI:
        squares = [x * x % m for x in range(m)]
        sieves.append((m, tuple(c % m for c in qi), squares))

    def admissible(vec: Tuple[int, int, int, int]) -> bool:
        for m, cm, squares in sieves:
            if sum(c * squares[abs(x) % m] for c, x in zip(cm, vec)) % m != 0:
                return False
        return True

    for h in range(0, budgets.quadric_height + 1):
        _poll(cancel)
        for vec in _shell_vectors(h):
            if not admissible(vec):
                continue
            if sum(c * x * x for c, x in zip(qi, vec)) == 0:
                return _primitive(vec)  # type: ignore[return-value]
    raise SearchBudgetError(
        f"no isotropic vector of height <= {budgets.quadric_height} for {qi}"
    )


def _shell_vectors(h: int):
    """All vectors with max coordinate |x| == h, first nonzero coordinate > 0."""
    if h == 0:
        return
    rng = range(-h, h + 1)
    for x1 in range(0, h + 1):
        for x2 in rng if x1 else range(0, h + 1):
            for x3 in rng if (x1 or x2) else range(0, h + 1):
                for x4 in rng if (x1 or x2 or x3) else range(1, h + 1):
                    if max(abs(x1), abs(x2), abs(x3), abs(x4)) == h:
                        yield (x1, x2, x3, x4)


# -- parametrization ----------------------------------------------------------------------


def parametrize_conic(
    a: Rat, b: Rat, point: Tuple[Rat, Rat], param: str = "t"
) -> Tuple[RatFunc, RatFunc]:
    """Rational maps (x(t), y(t)) sweeping x^2 - a*y^2 = b from a known point.

    Lines of slope direction (t, 1) through the point; a is a nonsquare so the
    direction is never isotropic.  Verified exactly before returning.
    """
    a = rat(a)
    b = rat(b)
    x0, y0 = rat(point[0]), rat(point[1])
    if x0 * x0 - a * y0 * y0 != b:
        raise ValueError("base point does not lie on the conic")
    t = RatFunc.var(param)
    denom = t * t - a
    s = RatFunc.const(-2) * (x0 * t - a * y0) / denom
    xm = s * t + x0
    ym = s + y0
    if xm * xm - RatFunc.const(a) * ym * ym != RatFunc.const(b):
        raise VerificationError("conic parametrization failed its symbolic check")
    return xm, ym


def stereographic_parametrize(
    q: QuadricSpec, p: Tuple[int, int, int, int], params: Tuple[str, str] = ("u", "v")
) -> SurfaceParam:
    """Birational parametrization of the quadric by projection from p.

    The parameter plane is a coordinate plane {x_l = 0} with p_l != 0 (charts
    tried in fixed coordinate order); maps are returned in the affine chart
    X/W, Y/W, Z/W and are verified symbolically, including the round trip back
    to the parameters, before returning.
    """
    if q.evaluate(p) != 0:
        raise ValueError("projection center does not lie on the quadric")
    if all(x == 0 for x in p):
        raise ValueError("projection center must be a nonzero projective point")
    u = RatFunc.var(params[0])
    v = RatFunc.var(params[1])
    coeffs = q.coeffs
    for l in range(4):
        if p[l] == 0:
            continue
        rest = [i for i in range(4) if i != l]
        for i in rest:
            j, k = [t for t in rest if t != i]
            # Direction point r = e_i + u e_j + v e_k on the plane {x_l = 0}.
            r: list = [RatFunc.const(0)] * 4
            r[i] = RatFunc.const(1)
            r[j] = u
            r[k] = v
            q_r = sum((RatFunc.const(c) * rr * rr for c, rr in zip(coeffs, r)),
                      RatFunc.const(0))
            b_pr = sum((RatFunc.const(c * pp) * rr for c, pp, rr in zip(coeffs, p, r)),
                       RatFunc.const(0))
            # Second intersection of the line through p and r with the quadric.
            x = [RatFunc.const(-pp) * q_r + RatFunc.const(2) * b_pr * rr
                 for pp, rr in zip(p, r)]
            if x[3].is_zero:
                continue
            maps = (x[0] / x[3], x[1] / x[3], x[2] / x[3])
            if _verify_quadric_param(q, maps) and _verify_round_trip(
                x, p, l, i, j, k, u, v
            ):
                named = {"x": maps[0], "y": maps[1], "z": maps[2]}
                return SurfaceParam(maps=named, base_point=tuple(p), params=params)
    raise DegenerateCenterError(
        f"no projection chart works for center {p} on {q.coeffs}"
    )


def _verify_quadric_param(
    q: QuadricSpec, maps: Tuple[RatFunc, RatFunc, RatFunc]
) -> bool:
    total = RatFunc.const(q.coeffs[3])
    for c, m in zip(q.coeffs, maps):
        total = total + RatFunc.const(c) * m * m
    return total.is_zero


def _verify_round_trip(x, p, l, i, j, k, u: RatFunc, v: RatFunc) -> bool:
    """Recover (u, v) from the image point: the line back through p hits {x_l=0}."""
    r_back = [xx * p[l] - RatFunc.const(pp) * x[l] for xx, pp in zip(x, p)]
    if r_back[i].is_zero:
        return False
    return (r_back[j] / r_back[i]) == u and (r_back[k] / r_back[i]) == v


def fiberwise_quadric_point(
    a: Rat,
    rhs_quadratic: Rat,
    rhs_const: Rat,
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
    max_fibers: int = 400,
) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """Point on x^2 - a*y^2 = P*z^2 + Q  (P = rhs_quadratic, Q = rhs_const).

    Scans small rational values z = n/d in a deterministic order and solves the
    resulting norm equation on each fiber; the Hilbert symbol rejects hopeless
    fibers cheaply.  Returns (x, y, z) or None when every scanned fiber fails.
    """
    a = rat(a)
    P = rat(rhs_quadratic)
    Q = rat(rhs_const)
    tried = 0
    for d in range(1, 40):
        for n in range(0, 40 * d):
            for sign in (1, -1):
                if n == 0 and sign == -1:
                    continue
                if gcd(n, d) != 1:
                    continue
                z = Fraction(sign * n, d)
                rhs = P * z * z + Q
                if rhs == 0:
                    continue
                tried += 1
                if tried > max_fibers:
                    return None
                sol = solve_norm_equation(a, rhs, budgets, cancel)
                if sol is not None:
                    return (sol.alpha, sol.beta, z)
    return None
