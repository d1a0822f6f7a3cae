"""Rationality decisions for the surface field of a SurfaceSpec.

The verdict is computed from finitely checkable symbol conditions, never from
point search, so it cannot depend on search budgets.  Constructive artifacts
(points, parametrizations) are built on demand and re-verified exactly before
they are attached to a certificate.  The single verdict covers the whole
equivalence class: rational == stably rational == unirational for these
fields, so no separate notions are reported.
"""

from __future__ import annotations

import ast
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .config import DEFAULT_BUDGETS, SearchBudgets
from .conic import (
    CancelCheck,
    ConicSolution,
    QuadricSpec,
    SurfaceParam,
    fiberwise_quadric_point,
    find_quadric_point,
    parametrize_conic,
    solve_norm_equation,
    stereographic_parametrize,
)
from .errors import ConicertError, InvalidSpecError, VerificationError
from .hilbert import RamificationSet, global_hilbert
from .multipoly import MultiPoly, RatFunc, eval_ratfunc_pair
from .quadelem import sqrt_of
from .quadfield import ExtSymbol, QuadField, ext_hilbert, squarefree_core
from .rationals import Rat, format_rat, is_square, rat
from .surface import SurfaceSpec

EQUIVALENCE_NOTE = "verdict-scope: rational == stably-rational == unirational"

ROUTE_QUADRIC = "case1-quadric"
ROUTE_LINEAR = "case2-linear"
ROUTE_SQUARE_CONIC = "square-b-conic"
ROUTE_SQUARE_LINEAR = "square-b-linear"

Point4 = Tuple[Fraction, Fraction, Fraction, Fraction]


# -- certificates -----------------------------------------------------------------


@dataclass(frozen=True)
class RationalCert:
    """Constructive evidence: a point on the norm-form surface when available,
    a construction route tag, and optionally the verified parametrization."""

    construction_route: str
    point: Optional[Point4] = None
    parametrization: Optional[SurfaceParam] = None

    def to_json(self) -> dict:
        return {
            "variant": "rational",
            "construction_route": self.construction_route,
            "point": None if self.point is None else [format_rat(x) for x in self.point],
            "parametrization": (
                None if self.parametrization is None else self.parametrization.to_json()
            ),
        }


@dataclass(frozen=True)
class NotRationalCert:
    """A symbol obstruction: which condition failed, plus the witness object."""

    failed_condition: str  # norm-form-b | ext-symbol | square-b-symbol
    obstruction: Union[RamificationSet, ExtSymbol]

    def to_json(self) -> dict:
        return {
            "variant": "not_rational",
            "failed_condition": self.failed_condition,
            "obstruction": self.obstruction.to_json(),
        }


Certificate = Union[RationalCert, NotRationalCert]


@dataclass(frozen=True)
class Decision:
    spec: SurfaceSpec
    verdict: str  # rational | not_rational
    certificate: Certificate
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        rational = self.verdict == "rational"
        if rational != isinstance(self.certificate, RationalCert):
            raise VerificationError("verdict inconsistent with certificate variant")

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == "rational" else 1

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "verdict": self.verdict,
            "certificate": self.certificate.to_json(),
            "notes": list(self.notes),
        }


# -- cached norm-equation solving -----------------------------------------------------


@lru_cache(maxsize=None)
def _cached_norm_solution(
    a: Fraction, b: Fraction, budgets: SearchBudgets
) -> Optional[ConicSolution]:
    return solve_norm_equation(a, b, budgets)


# -- the decision procedure -----------------------------------------------------------


def _discriminant_field(spec: SurfaceSpec, notes: List[str]) -> QuadField:
    disc = spec.d * spec.d - 4 * spec.b * spec.c * spec.c
    K = squarefree_core(disc)
    if K.is_trivial:
        notes.append(
            "degenerate-discriminant: d^2-4*b*c^2 = "
            f"{format_rat(disc)} is a square, so the base-change field is trivial"
        )
    return K


def decide(
    spec: SurfaceSpec,
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
    build_param: bool = False,
) -> Decision:
    """Decide Q-rationality of the surface field of spec.

    Nonsquare b: the norm-form symbol (a, b) must vanish; then, with any
    (alpha, beta) solving alpha^2 - a*beta^2 = b, the field is rational iff
    d - 2*c*alpha is zero or the symbol (a, d - 2*c*alpha) vanishes after base
    change to Q(sqrt(d^2 - 4*b*c^2)).  Square b = beta^2: rational iff the
    base-changed symbol (a, d - 2*c*beta) vanishes, or, when d - 2*c*beta = 0,
    iff the symbol (a, 2d) vanishes over Q.  The verdict does not depend on
    the chosen solution (alpha, beta) or on the sign of beta.
    """
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    notes: List[str] = [EQUIVALENCE_NOTE]
    beta_sq = spec.b_square_root

    if beta_sq is not None:
        # Square b.  beta is taken as the nonnegative square root; the verdict
        # is invariant under beta -> -beta (sign-invariance property test).
        beta = beta_sq
        e = d - 2 * c * beta
        if e == 0:
            ram = global_hilbert(a, 2 * d)
            if ram.is_empty:
                cert: Certificate = RationalCert(construction_route=_square_route(spec))
                decision = Decision(spec, "rational", cert, tuple(notes))
                return _attach_param(decision, budgets, cancel) if build_param else decision
            return Decision(
                spec,
                "not_rational",
                NotRationalCert("square-b-symbol", ram),
                tuple(notes),
            )
        K = _discriminant_field(spec, notes)
        sym = ext_hilbert(a, e, K)
        if sym.is_zero:
            cert = RationalCert(construction_route=_square_route(spec))
            decision = Decision(spec, "rational", cert, tuple(notes))
            return _attach_param(decision, budgets, cancel) if build_param else decision
        return Decision(
            spec, "not_rational", NotRationalCert("square-b-symbol", sym), tuple(notes)
        )

    # Nonsquare b.
    ram = global_hilbert(a, b)
    if not ram.is_empty:
        return Decision(
            spec, "not_rational", NotRationalCert("norm-form-b", ram), tuple(notes)
        )
    sol = _cached_norm_solution(a, b, budgets)
    assert sol is not None  # symbol is zero, so the norm equation is solvable
    alpha, beta = sol.alpha, sol.beta
    e = d - 2 * c * alpha
    if e != 0:
        K = _discriminant_field(spec, notes)
        sym = ext_hilbert(a, e, K)
        if not sym.is_zero:
            return Decision(
                spec, "not_rational", NotRationalCert("ext-symbol", sym), tuple(notes)
            )

    point = point_on_X(spec, budgets, cancel)
    if point is None:
        notes.append("point-unavailable-for-chosen-alpha")
        route_alpha = alpha
    else:
        route_alpha = point[0]
    cert = RationalCert(construction_route=_nonsquare_route(spec, route_alpha), point=point)
    decision = Decision(spec, "rational", cert, tuple(notes))
    return _attach_param(decision, budgets, cancel) if build_param else decision


def _attach_param(
    decision: Decision, budgets: SearchBudgets, cancel: CancelCheck
) -> Decision:
    assert isinstance(decision.certificate, RationalCert)
    route, param = _construct_parametrization(
        decision.spec, decision.certificate.point, budgets, cancel
    )
    cert = RationalCert(
        construction_route=route,
        point=decision.certificate.point,
        parametrization=param,
    )
    return Decision(decision.spec, decision.verdict, cert, decision.notes)


def _nonsquare_route(spec: SurfaceSpec, alpha: Fraction) -> str:
    twoca = 2 * spec.c * alpha
    if twoca + spec.d == 0 or twoca - spec.d == 0:
        return ROUTE_LINEAR
    return ROUTE_QUADRIC


def _square_route(spec: SurfaceSpec) -> str:
    beta = spec.b_square_root
    assert beta is not None
    return ROUTE_SQUARE_LINEAR if spec.d - 2 * spec.c * beta == 0 else ROUTE_SQUARE_CONIC


# -- constructive points ---------------------------------------------------------------


def point_on_X(
    spec: SurfaceSpec,
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
) -> Optional[Point4]:
    """A rational point (alpha, beta, gamma, delta) with alpha^2 - a*beta^2 = b
    and gamma^2 - a*delta^2 = 2*c*alpha + d, or None.

    The base solution comes from the norm-equation solver; both signs of alpha
    are tried for the second coordinate pair before giving up.  Note that for
    square b a point may exist while the field is not rational.
    """
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    sol = _cached_norm_solution(a, b, budgets)
    if sol is None:
        return None
    alphas = [sol.alpha] if sol.alpha == 0 else [sol.alpha, -sol.alpha]
    for alpha in alphas:
        rhs = 2 * c * alpha + d
        if rhs == 0:
            return (alpha, sol.beta, Fraction(0), Fraction(0))
        second = _cached_norm_solution(a, rat(rhs), budgets)
        if second is not None:
            return (alpha, sol.beta, second.alpha, second.beta)
    return None


def _check_point(spec: SurfaceSpec, point: Sequence[Rat]) -> Point4:
    alpha, beta, gamma, delta = (rat(x) for x in point)
    a = spec.a
    if alpha * alpha - a * beta * beta != spec.b:
        raise InvalidSpecError("point fails the norm relation for (alpha, beta)")
    if gamma * gamma - a * delta * delta != 2 * spec.c * alpha + spec.d:
        raise InvalidSpecError("point fails the fiber relation for (gamma, delta)")
    return (alpha, beta, gamma, delta)


def _projective_int_point(coords: Sequence[Fraction]) -> Tuple[int, ...]:
    scale = lcm(*(x.denominator for x in coords), 1)
    vec = tuple(int(x * scale) for x in coords) + (scale,)
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    return tuple(x // g for x in vec)


# -- parametrization construction --------------------------------------------------------


def build_parametrization(
    spec: SurfaceSpec,
    point: Optional[Sequence[Rat]] = None,
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
) -> SurfaceParam:
    """Explicit rational maps (t1, t2, t3, t4) in two parameters sweeping the
    surface of spec, verified as exact identities before returning.

    Requires a rational verdict; point, when given, must satisfy both surface
    relations and is used to steer the construction.
    """
    decision = decide(spec, budgets, cancel)
    if decision.verdict != "rational":
        raise InvalidSpecError("parametrization requires a rational verdict")
    known = _check_point(spec, point) if point is not None else None
    if known is None and isinstance(decision.certificate, RationalCert):
        known = decision.certificate.point
    _, param = _construct_parametrization(spec, known, budgets, cancel)
    return param


def _construct_parametrization(
    spec: SurfaceSpec,
    known: Optional[Point4],
    budgets: SearchBudgets,
    cancel: CancelCheck,
) -> Tuple[str, SurfaceParam]:
    if spec.b_square_root is not None:
        return _parametrize_square(spec, budgets, cancel)
    return _parametrize_nonsquare(spec, known, budgets, cancel)


# Numerator/denominator pairs let the construction avoid the gcd
# normalization that RatFunc arithmetic performs per operation; each final
# map is normalized exactly once.
Pair = Tuple[MultiPoly, MultiPoly]


def _pconst(x) -> Pair:
    return MultiPoly.const(x), MultiPoly.const(1)


def _pmul(p: Pair, q: Pair) -> Pair:
    return p[0] * q[0], p[1] * q[1]


def _padd(p: Pair, q: Pair) -> Pair:
    return p[0] * q[1] + q[0] * p[1], p[1] * q[1]


def _psub(p: Pair, q: Pair) -> Pair:
    return p[0] * q[1] - q[0] * p[1], p[1] * q[1]


def _pdiv(p: Pair, q: Pair) -> Pair:
    if q[0].is_zero:
        raise ZeroDivisionError("pair division by zero")
    return p[0] * q[1], p[1] * q[0]


def _pair_of(f: RatFunc) -> Pair:
    return f.numer, f.denom


def _verify_surface_pairs(spec: SurfaceSpec, maps: Dict[str, Pair]) -> None:
    """Both surface relations, cross-multiplied to polynomial identities."""
    a = MultiPoly.const(spec.a)
    (n1, d1), (n2, d2) = maps["t1"], maps["t2"]
    (n3, d3), (n4, d4) = maps["t3"], maps["t4"]
    rel1 = n1 * n1 * (d2 * d2) - a * (n2 * n2) * (d1 * d1) - spec.b * (
        d1 * d1
    ) * (d2 * d2)
    if not rel1.is_zero:
        raise VerificationError("parametrization fails the norm relation")
    d34 = (d3 * d3) * (d4 * d4)
    rel2 = (
        n3 * n3 * (d4 * d4) * d1
        - a * (n4 * n4) * (d3 * d3) * d1
        - (2 * spec.c) * n1 * d34
        - spec.d * d1 * d34
    )
    if not rel2.is_zero:
        raise VerificationError("parametrization fails the fiber relation")
    for name, (n, d) in maps.items():
        if n.conjugate() != n or d.conjugate() != d:
            raise VerificationError(f"map {name} has irrational coefficients")


def _rationalize_pair(p: Pair) -> Pair:
    """Clear sqrt(a) from a conjugation-fixed pair's coefficients."""
    n, d = p
    nn = n * d.conjugate()
    dd = d * d.conjugate()
    if nn.conjugate() != nn:
        raise VerificationError("map has irrational coefficients")
    return nn, dd


def _parametrize_nonsquare(
    spec: SurfaceSpec,
    known: Optional[Point4],
    budgets: SearchBudgets,
    cancel: CancelCheck,
) -> Tuple[str, SurfaceParam]:
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    if known is not None:
        alpha, beta = known[0], known[1]
    else:
        sol = _cached_norm_solution(a, b, budgets)
        assert sol is not None
        alpha, beta = sol.alpha, sol.beta
    # beta != 0 because b is a nonsquare, and c*beta != 0 on the linear routes
    # (c = 0 would force d = 0 there, which SurfaceSpec rejects).
    u: Pair = (MultiPoly.var("u"), MultiPoly.const(1))
    v: Pair = (MultiPoly.var("v"), MultiPoly.const(1))
    A = _pconst(a)
    twoca = 2 * c * alpha
    base_point: Optional[Tuple[int, ...]] = None

    if twoca - d == 0:
        # Fiber value is linear in t0: solve for t0 with t5, t6 free.
        route = ROUTE_LINEAR
        t5, t6 = u, v
        t0 = _pdiv(
            _psub(_psub(_pmul(t5, t5), _pmul(A, _pmul(t6, t6))), _pconst(twoca + d)),
            _pconst(4 * a * c * beta),
        )
    elif twoca + d == 0:
        # Fiber value is t0 times a linear factor: parameters t5/t0, t6/t0.
        route = ROUTE_LINEAR
        t0 = _pdiv(
            _pconst(4 * a * c * beta),
            _psub(_psub(_pmul(u, u), _pmul(A, _pmul(v, v))), _pconst(4 * a * c * alpha)),
        )
        t5 = _pmul(u, t0)
        t6 = _pmul(v, t0)
    else:
        route = ROUTE_QUADRIC
        B = a * (twoca - d)
        C = (d * d - 4 * b * c * c) / (twoca - d)
        mu = 2 * c * beta / (twoca - d)
        if C == 0:
            # Cone: scale a conic parametrization of x^2 - a*y^2 = B.
            base = solve_norm_equation(a, B, budgets, cancel)
            if base is None:
                raise VerificationError("cone route lost its guaranteed conic point")
            xm, ym = parametrize_conic(a, B, (base.alpha, base.beta), param="u")
            t5, t6 = _pmul(v, _pair_of(xm)), _pmul(v, _pair_of(ym))
            t0 = _psub(v, _pconst(mu))
        else:
            quadric = QuadricSpec(coeffs=(rat(1), -a, -rat(B), rat(C)))
            if known is not None:
                gamma, delta = known[2], known[3]
                pt = _projective_int_point((gamma, delta, mu))
            else:
                fiber = fiberwise_quadric_point(a, B, -C, budgets, cancel)
                pt = (
                    _projective_int_point(fiber)
                    if fiber is not None
                    else find_quadric_point(quadric, budgets, cancel)
                )
            if quadric.evaluate(pt) != 0:
                raise VerificationError("quadric point failed its exact re-check")
            sp = stereographic_parametrize(quadric, tuple(pt))  # type: ignore[arg-type]
            base_point = sp.base_point
            t5, t6 = _pair_of(sp.maps["x"]), _pair_of(sp.maps["y"])
            t0 = _psub(_pair_of(sp.maps["z"]), _pconst(mu))

    at0sq = _pmul(A, _pmul(t0, t0))
    den = _psub(_pconst(1), at0sq)
    t1 = _pdiv(
        _padd(_pmul(_pconst(alpha), _padd(_pconst(1), at0sq)), _pmul(_pconst(2 * a * beta), t0)),
        den,
    )
    t2 = _pdiv(
        _padd(_pmul(_pconst(beta), _padd(_pconst(1), at0sq)), _pmul(_pconst(2 * alpha), t0)),
        den,
    )
    t3 = _pdiv(_psub(t5, _pmul(A, _pmul(t0, t6))), den)
    t4 = _pdiv(_psub(t6, _pmul(t0, t5)), den)
    pairs = {"t1": t1, "t2": t2, "t3": t3, "t4": t4}
    maps = {name: RatFunc(n, d) for name, (n, d) in pairs.items()}
    _verify_surface_pairs(spec, {k: (m.numer, m.denom) for k, m in maps.items()})
    return route, SurfaceParam(maps=maps, base_point=base_point, params=("u", "v"))


def _parametrize_square(
    spec: SurfaceSpec, budgets: SearchBudgets, cancel: CancelCheck
) -> Tuple[str, SurfaceParam]:
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    beta = spec.b_square_root
    assert beta is not None and beta != 0
    P = d - 2 * c * beta
    Q = -a * (d + 2 * c * beta)
    u: Pair = (MultiPoly.var("u"), MultiPoly.const(1))
    v: Pair = (MultiPoly.var("v"), MultiPoly.const(1))
    base_point: Optional[Tuple[int, ...]] = None

    # Generators expressed through the invariant coordinates (w, s1, s2)
    # subject to s1^2 - a*s2^2 = P*w^2 + Q.
    ra = RatFunc.const(sqrt_of(a))
    w, s1, s2 = (RatFunc.var(n) for n in ("w", "s1", "s2"))
    x = RatFunc.const(beta) * (ra - w) / (ra + w)
    y = (s1 + ra * s2) / (ra - w)
    xx = x + RatFunc.const(b) / x
    half = RatFunc.const(Fraction(1, 2))
    t1 = half * xx
    t2 = half * (x - RatFunc.const(b) / x) / ra
    yy = (RatFunc.const(c) * xx + RatFunc.const(d)) / y
    t3 = half * (y + yy)
    t4 = half * (y - yy) / ra

    if P == 0:
        # Constant fiber: conic in (s1, s2) times a free line in w.
        route = ROUTE_SQUARE_LINEAR
        base = solve_norm_equation(a, Q, budgets, cancel)
        if base is None:
            raise VerificationError("linear route lost its guaranteed conic point")
        s1m, s2m = parametrize_conic(a, Q, (base.alpha, base.beta), param="v")
        bindings = {"w": u, "s1": _pair_of(s1m), "s2": _pair_of(s2m)}
    elif Q == 0:
        # Cone: scale a conic parametrization of x^2 - a*y^2 = P.
        route = ROUTE_SQUARE_CONIC
        base = solve_norm_equation(a, P, budgets, cancel)
        if base is None:
            raise VerificationError("cone route lost its guaranteed conic point")
        xm, ym = parametrize_conic(a, P, (base.alpha, base.beta), param="u")
        bindings = {"w": v, "s1": _pmul(v, _pair_of(xm)), "s2": _pmul(v, _pair_of(ym))}
    else:
        route = ROUTE_SQUARE_CONIC
        quadric = QuadricSpec(coeffs=(rat(1), -a, -rat(P), -rat(Q)))
        fiber = fiberwise_quadric_point(a, P, Q, budgets, cancel)
        if fiber is not None:
            s1v, s2v, wv = fiber
            pt = _projective_int_point((s1v, s2v, wv))
        else:
            pt = find_quadric_point(quadric, budgets, cancel)
        if quadric.evaluate(pt) != 0:
            raise VerificationError("quadric point failed its exact re-check")
        sp = stereographic_parametrize(quadric, tuple(pt))  # type: ignore[arg-type]
        base_point = sp.base_point
        bindings = {
            "w": _pair_of(sp.maps["z"]),
            "s1": _pair_of(sp.maps["x"]),
            "s2": _pair_of(sp.maps["y"]),
        }

    pairs: Dict[str, Pair] = {}
    for name, t in (("t1", t1), ("t2", t2), ("t3", t3), ("t4", t4)):
        pairs[name] = _rationalize_pair(eval_ratfunc_pair(t, bindings))
    maps = {name: RatFunc(n, d) for name, (n, d) in pairs.items()}
    _verify_surface_pairs(spec, {k: (m.numer, m.denom) for k, m in maps.items()})
    return route, SurfaceParam(maps=maps, base_point=base_point, params=("u", "v"))


# -- multi-component fields ----------------------------------------------------------------


@dataclass(frozen=True)
class MultiDecision:
    """Verdict for a compositum of component surface fields sharing one a:
    rational iff every component is."""

    a: Fraction
    verdict: str
    components: Tuple[Decision, ...]

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == "rational" else 1

    def to_json(self) -> dict:
        return {
            "a": format_rat(self.a),
            "verdict": self.verdict,
            "components": [dec.to_json() for dec in self.components],
        }


def decide_multi(
    a: Rat,
    components: Sequence[Tuple[Rat, Rat, Rat]],
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
) -> MultiDecision:
    a = rat(a)
    decisions = tuple(
        decide(SurfaceSpec(a, b, c, d), budgets, cancel) for b, c, d in components
    )
    verdict = "rational" if all(d.verdict == "rational" for d in decisions) else "not_rational"
    return MultiDecision(a=a, verdict=verdict, components=decisions)


@dataclass(frozen=True)
class NormTorusEntry:
    b: Fraction
    is_zero: bool
    ramification: RamificationSet

    def to_json(self) -> dict:
        return {
            "b": format_rat(self.b),
            "symbol": "zero" if self.is_zero else "nonzero",
            "ramification": self.ramification.to_json(),
        }


@dataclass(frozen=True)
class NormToriDecision:
    """Products of norm-one tori for x^2 - a*y^2 = b_i: rational iff every
    symbol (a, b_i) vanishes over Q."""

    a: Fraction
    verdict: str
    entries: Tuple[NormTorusEntry, ...]

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == "rational" else 1

    def to_json(self) -> dict:
        return {
            "a": format_rat(self.a),
            "verdict": self.verdict,
            "entries": [e.to_json() for e in self.entries],
        }


def decide_norm_tori(a: Rat, bs: Sequence[Rat]) -> NormToriDecision:
    a = rat(a)
    if is_square(a) is not None:
        raise InvalidSpecError("a must be a rational nonsquare")
    entries = []
    for b in bs:
        b = rat(b)
        if b == 0:
            raise InvalidSpecError("every b must be nonzero")
        ram = global_hilbert(a, b)
        entries.append(NormTorusEntry(b=b, is_zero=ram.is_empty, ramification=ram))
    verdict = "rational" if all(e.is_zero for e in entries) else "not_rational"
    return NormToriDecision(a=a, verdict=verdict, entries=tuple(entries))


# -- parameter scans --------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanEntry:
    c: Fraction
    status: str  # rational | not_rational | skipped | error
    detail: str = ""

    def to_json(self) -> dict:
        out = {"c": format_rat(self.c), "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class ScanResult:
    family: str
    a: Fraction
    b: Fraction
    d_rule: str
    entries: Tuple[ScanEntry, ...]

    def values_with_status(self, status: str) -> List[Fraction]:
        return [e.c for e in self.entries if e.status == status]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "a": format_rat(self.a),
            "b": format_rat(self.b),
            "d_rule": self.d_rule,
            "entries": [e.to_json() for e in self.entries],
            "rational": [format_rat(c) for c in self.values_with_status("rational")],
            "not_rational": [
                format_rat(c) for c in self.values_with_status("not_rational")
            ],
        }


_ALLOWED_BINOPS = {
    ast.Add: lambda x, y: x + y,
    ast.Sub: lambda x, y: x - y,
    ast.Mult: lambda x, y: x * y,
    ast.Div: lambda x, y: x / y,
    ast.Pow: lambda x, y: x**y,
}


def eval_d_rule(expr: str, c: Fraction) -> Fraction:
    """Evaluate a d-template like "c", "2*c+1", or "c**2/3" at a value of c.

    Only rational arithmetic on integer literals and the name c is allowed.
    """

    def ev(node) -> Fraction:
        if isinstance(node, ast.BinOp) and type(node.op) in _ALLOWED_BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow):
                if right.denominator != 1:
                    raise InvalidSpecError("exponents in d rules must be integers")
                return left ** int(right)
            return _ALLOWED_BINOPS[type(node.op)](left, right)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id == "c":
            return c
        raise InvalidSpecError(f"unsupported d rule syntax: {expr!r}")

    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise InvalidSpecError(f"cannot parse d rule {expr!r}") from exc
    return ev(tree.body)


SCAN_FAMILIES: Dict[str, dict] = {
    "ex22": {"a": Fraction(2), "b": Fraction(1), "c_values": range(1, 101), "d_rule": "c"},
    "ex23": {
        "a": Fraction(2),
        "b": Fraction(2),
        "c_values": [c for c in range(-100, 101) if c != 0],
        "d_rule": "c",
    },
}


def _scan_one(
    a: Fraction, b: Fraction, c: Fraction, d: Fraction, budgets: SearchBudgets
) -> Tuple[str, str]:
    try:
        spec = SurfaceSpec(a, b, c, d)
    except InvalidSpecError as exc:
        return "skipped", str(exc)
    try:
        return decide(spec, budgets).verdict, ""
    except ConicertError as exc:
        return "error", f"{type(exc).__name__}: {exc}"


def _scan_worker(payload) -> Tuple[str, str]:
    return _scan_one(*payload)


def scan(
    family: str = "custom",
    a: Optional[Rat] = None,
    b: Optional[Rat] = None,
    c_values: Optional[Sequence[Rat]] = None,
    d_rule: str = "c",
    jobs: int = 1,
    budgets: SearchBudgets = DEFAULT_BUDGETS,
    cancel: CancelCheck = None,
) -> ScanResult:
    """Decide a one-parameter family of specs (a, b, c, d(c)) over a c range.

    Built-in families ex22 and ex23 fix (a, b, d_rule) and the c range;
    family "custom" takes them from the arguments.  Per-entry failures are
    reported inline and never abort the scan; results keep input order.
    """
    if family in SCAN_FAMILIES:
        preset = SCAN_FAMILIES[family]
        a, b, c_values, d_rule = (
            preset["a"],
            preset["b"],
            preset["c_values"],
            preset["d_rule"],
        )
    elif family != "custom":
        raise InvalidSpecError(f"unknown scan family {family!r}")
    if a is None or b is None or c_values is None:
        raise InvalidSpecError("custom scans need a, b, and a c range")
    a = rat(a)
    b = rat(b)
    cs = [rat(c) for c in c_values]
    payloads = []
    for c in cs:
        try:
            d = eval_d_rule(d_rule, c)
        except (InvalidSpecError, ZeroDivisionError) as exc:
            payloads.append(None)
            continue
        payloads.append((a, b, c, d, budgets))

    results: List[Tuple[str, str]] = []
    if jobs > 1:
        live = [p for p in payloads if p is not None]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            computed = iter(list(pool.map(_scan_worker, live)))
        results = [
            next(computed) if p is not None else ("skipped", "d rule failed")
            for p in payloads
        ]
    else:
        for p in payloads:
            if cancel is not None and cancel():
                break
            if p is None:
                results.append(("skipped", "d rule failed"))
            else:
                results.append(_scan_one(*p))

    entries = tuple(
        ScanEntry(c=c, status=status, detail=detail)
        for c, (status, detail) in zip(cs, results)
    )
    return ScanResult(family=family, a=a, b=b, d_rule=d_rule, entries=entries)
