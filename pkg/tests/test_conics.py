"""Constructive solvers: norm equations, quadric points, parametrizations."""

from fractions import Fraction

import pytest

from conicert.config import SearchBudgets
from conicert.conic import (
    QuadricSpec,
    fiberwise_quadric_point,
    find_quadric_point,
    parametrize_conic,
    solve_norm_equation,
    stereographic_parametrize,
)
from conicert.errors import SearchBudgetError
from conicert.hilbert import global_hilbert
from conicert.multipoly import RatFunc


# -- norm equations -----------------------------------------------------------------


def test_solve_norm_equation_known_solvable():
    sol = solve_norm_equation(2, 7)
    assert sol.alpha**2 - 2 * sol.beta**2 == 7
    sol = solve_norm_equation(Fraction(1, 2), Fraction(7, 9))
    assert sol.alpha**2 - Fraction(1, 2) * sol.beta**2 == Fraction(7, 9)


def test_solve_norm_equation_unsolvable_returns_none():
    assert solve_norm_equation(3, -1) is None  # -1 is not a residue mod 3
    assert solve_norm_equation(2, 3) is None


def test_solve_norm_equation_agrees_with_symbol_on_a_range():
    for a in (-2, 2, 3, 5):
        for b in range(-12, 13):
            if b == 0:
                continue
            sol = solve_norm_equation(a, b)
            assert (sol is None) == (not global_hilbert(a, b).is_empty)
            if sol is not None:
                assert sol.alpha**2 - a * sol.beta**2 == b


def test_solve_norm_equation_validation():
    with pytest.raises(ValueError):
        solve_norm_equation(4, 5)  # square a
    with pytest.raises(ValueError):
        solve_norm_equation(2, 0)


def test_solver_cancellation():
    with pytest.raises(SearchBudgetError):
        solve_norm_equation(2, 7, cancel=lambda: True)


# -- quadric specs and points ------------------------------------------------------------


def test_quadric_spec_validation():
    with pytest.raises(ValueError):
        QuadricSpec(coeffs=(1, 0, -1, 1))
    with pytest.raises(ValueError):
        QuadricSpec(coeffs=(1, 2, 3, 4))  # definite
    q = QuadricSpec(coeffs=(Fraction(1, 2), -1, -1, Fraction(3, 2)))
    assert q.integer_coeffs() == (1, -2, -2, 3)
    assert q.evaluate((1, 1, 1, 1)) == 0


def test_find_quadric_point():
    q = QuadricSpec(coeffs=(1, -1, -1, 1))
    pt = find_quadric_point(q)
    assert q.evaluate(pt) == 0
    assert any(pt)
    # primitive with positive first nonzero coordinate
    from math import gcd

    g = 0
    for x in pt:
        g = gcd(g, abs(x))
    assert g == 1


def test_find_quadric_point_budget_exhaustion():
    # x^2 - 3y^2 - 5z^2 + 15w^2 is the norm form of a division algebra: no zeros
    q = QuadricSpec(coeffs=(1, -3, -5, 15))
    assert not global_hilbert(3, 5).is_empty
    with pytest.raises(SearchBudgetError):
        find_quadric_point(q, budgets=SearchBudgets(quadric_height=25))


# -- parametrizations ----------------------------------------------------------------------


def test_parametrize_conic_identity_and_base_point():
    xm, ym = parametrize_conic(2, 7, (3, 1))
    assert xm * xm - RatFunc.const(2) * ym * ym == RatFunc.const(7)
    # sampling a few parameter values gives distinct points on the conic
    seen = set()
    for t0 in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-3)):
        consts = {"t": RatFunc.const(t0)}
        x0 = xm.substitute(consts).const_value()
        y0 = ym.substitute(consts).const_value()
        assert x0 * x0 - 2 * y0 * y0 == 7
        seen.add((x0, y0))
    assert len(seen) == 4


def test_parametrize_conic_rejects_off_curve_point():
    with pytest.raises(ValueError):
        parametrize_conic(2, 7, (1, 1))


def test_stereographic_parametrization_round_trip():
    q = QuadricSpec(coeffs=(1, -1, -1, 1))
    sp = stereographic_parametrize(q, (1, 1, 0, 0))
    assert sp.base_point == (1, 1, 0, 0)
    x, y, z = sp.maps["x"], sp.maps["y"], sp.maps["z"]
    total = (
        RatFunc.const(q.coeffs[0]) * x * x
        + RatFunc.const(q.coeffs[1]) * y * y
        + RatFunc.const(q.coeffs[2]) * z * z
        + RatFunc.const(q.coeffs[3])
    )
    assert total.is_zero
    # two distinct parameter values hit two distinct affine points
    p1 = {n: m.substitute({"u": RatFunc.const(Fraction(1, 3)), "v": RatFunc.const(2)})
          for n, m in sp.maps.items()}
    p2 = {n: m.substitute({"u": RatFunc.const(3), "v": RatFunc.const(Fraction(-1, 2))})
          for n, m in sp.maps.items()}
    assert any(p1[n] != p2[n] for n in ("x", "y", "z"))


def test_stereographic_rejects_off_quadric_center():
    q = QuadricSpec(coeffs=(1, -1, -1, 1))
    with pytest.raises(ValueError):
        stereographic_parametrize(q, (1, 2, 0, 0))


def test_fiberwise_quadric_point():
    got = fiberwise_quadric_point(2, 1, 1)
    assert got is not None
    x, y, z = got
    assert x * x - 2 * y * y == z * z + 1
    assert fiberwise_quadric_point(3, 0, -1, max_fibers=20) is None  # x^2-3y^2=-1
