"""Symbolic checks of the involution, generators, and substitution chains."""

import random
from fractions import Fraction

import pytest

from conicert.errors import InvalidSpecError
from conicert.multipoly import RatFunc
from conicert.sigma import (
    apply_sigma,
    build_generators,
    sigma_action,
    sqrt_a,
    verify_involution_and_invariance,
    verify_norm_product_identity,
    verify_proof_chain_nonsquare,
    verify_proof_chain_square,
)
from conicert.surface import SurfaceSpec

from conftest import rand_nonsquare, rand_spec


def _failing(report):
    return [c.check for c in report.checks if not c.passed]


def test_sigma_action_images():
    spec = SurfaceSpec(2, 3, 1, 5)
    act = sigma_action(spec)
    x = RatFunc.var("x")
    y = RatFunc.var("y")
    assert act.bindings["x"] == RatFunc.const(3) / x
    expected_y = (RatFunc.const(1) * (x + RatFunc.const(3) / x) + RatFunc.const(5)) / y
    assert act.bindings["y"] == expected_y
    # coefficients in Q(sqrt(a)) are conjugated before substitution
    assert apply_sigma(sqrt_a(spec), act) == -sqrt_a(spec)
    assert apply_sigma(apply_sigma((x + y) / (x - y), act), act) == (x + y) / (x - y)


def test_generators_satisfy_defining_relations():
    spec = SurfaceSpec(2, 3, 1, 5)
    gens = build_generators(spec)
    a, b, c, d = spec.a, spec.b, spec.c, spec.d
    assert (gens.t1**2 - RatFunc.const(a) * gens.t2**2) == RatFunc.const(b)
    rel2 = gens.t3**2 - RatFunc.const(a) * gens.t4**2
    assert rel2 == RatFunc.const(2 * c) * gens.t1 + RatFunc.const(d)


def test_involution_and_invariance_report():
    report = verify_involution_and_invariance(SurfaceSpec(2, 3, 1, 5))
    assert report.all_passed, _failing(report)
    names = [c.check for c in report.checks]
    assert "involution on x" in names
    assert "t4 invariant" in names
    payload = report.to_json()
    assert all(set(entry) == {"check", "status", "detail"} for entry in payload)
    assert all(entry["status"] == "pass" for entry in payload)


def test_involution_holds_for_random_specs():
    rng = random.Random(60103)
    for _ in range(12):
        report = verify_involution_and_invariance(rand_spec(rng))
        assert report.all_passed, _failing(report)


def test_norm_product_identity():
    report = verify_norm_product_identity()
    assert report.all_passed, _failing(report)
    assert len(report.checks) == 2


def test_nonsquare_chain_passes():
    # alpha^2 - 2*beta^2 = 7 with (alpha, beta) = (3, 1)
    spec = SurfaceSpec(2, 7, 1, 5)
    report = verify_proof_chain_nonsquare(spec, 3, 1)
    assert report.all_passed, _failing(report)


def test_nonsquare_chain_random_instances():
    rng = random.Random(881)
    done = 0
    while done < 6:
        a = rand_nonsquare(rng)
        alpha = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        beta = Fraction(rng.randint(1, 6), rng.randint(1, 3))
        b = alpha * alpha - a * beta * beta
        from conicert.rationals import is_square

        if b == 0 or is_square(b) is not None:
            continue
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 2))
        d = Fraction(rng.randint(-5, 5), rng.randint(1, 2))
        if c == 0 and d == 0:
            continue
        report = verify_proof_chain_nonsquare(SurfaceSpec(a, b, c, d), alpha, beta)
        assert report.all_passed, _failing(report)
        done += 1


def test_nonsquare_chain_guards():
    spec = SurfaceSpec(2, 7, 1, 5)
    with pytest.raises(InvalidSpecError):
        verify_proof_chain_nonsquare(spec, 1, 1)  # 1 - 2 != 7
    square_spec = SurfaceSpec(2, 9, 1, 5)
    with pytest.raises(InvalidSpecError):
        verify_proof_chain_nonsquare(square_spec, 3, 0)


def test_square_chain_passes():
    spec = SurfaceSpec(2, 9, 1, 5)
    for beta in (3, -3):
        report = verify_proof_chain_square(spec, beta)
        assert report.all_passed, _failing(report)


def test_square_chain_flags_degenerate_fiber():
    # d = 2*c*beta makes the fiber right-hand side constant
    spec = SurfaceSpec(2, 9, 1, 6)
    report = verify_proof_chain_square(spec, 3)
    assert report.all_passed, _failing(report)
    details = {c.check: c.detail for c in report.checks}
    assert "degenerate fiber coefficient" in details
    assert "d - 2*c*beta = 0" in details["degenerate fiber coefficient"]


def test_square_chain_guards():
    spec = SurfaceSpec(2, 9, 1, 5)
    with pytest.raises(InvalidSpecError):
        verify_proof_chain_square(spec, 2)
    with pytest.raises(InvalidSpecError):
        verify_proof_chain_square(spec, 0)


def test_invalid_specs_rejected():
    with pytest.raises(InvalidSpecError):
        SurfaceSpec(4, 1, 1, 1)  # square a
    with pytest.raises(InvalidSpecError):
        SurfaceSpec(2, 0, 1, 1)
    with pytest.raises(InvalidSpecError):
        SurfaceSpec(2, 1, 0, 0)
