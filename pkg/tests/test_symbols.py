"""Places, factorization, residue symbols, and Hilbert symbols over Q."""

import random
from fractions import Fraction

import pytest

from conicert.hilbert import (
    Place,
    RamificationSet,
    candidate_places,
    factor,
    global_hilbert,
    is_prime,
    jacobi,
    kronecker,
    local_hilbert,
)


# -- places and ramification sets ----------------------------------------------------


def test_place_ordering_real_last():
    places = sorted([Place.real(), Place.finite(7), Place.finite(2)])
    assert [str(v) for v in places] == ["2", "7", "infinity"]


def test_place_rejects_composite():
    with pytest.raises(ValueError):
        Place.finite(6)


def test_ramification_set_must_be_even():
    with pytest.raises(ValueError):
        RamificationSet(places=(Place.finite(3),))
    ok = RamificationSet(places=(Place.real(), Place.finite(2)))
    assert len(ok) == 2
    assert ok.to_json() == ["2", "infinity"]


# -- primality and factorization -----------------------------------------------------


def test_is_prime_known_values():
    assert is_prime(2) and is_prime(3) and is_prime(97)
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)
    assert not is_prime(561)  # Carmichael number
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)


def test_factor_round_trips():
    rng = random.Random(31337)
    for _ in range(50):
        n = rng.randint(1, 10**9) * rng.choice((1, -1))
        f = factor(n)
        assert f.value() == n
        assert all(is_prime(p) for p, _ in f.factors)
        assert all(e >= 1 for _, e in f.factors)
        primes = [p for p, _ in f.factors]
        assert primes == sorted(primes)


def test_factor_known():
    f = factor(-360)
    assert f.sign == -1
    assert f.factors == ((2, 3), (3, 2), (5, 1))
    # semiprime just beyond the trial-division limit
    p, q = 1000003, 1000033
    assert factor(p * q).factors == ((p, 1), (q, 1))
    with pytest.raises(ValueError):
        factor(0)


# -- residue symbols -------------------------------------------------------------------


def test_jacobi_matches_euler_criterion():
    # independent oracle: for odd prime p, (a|p) == a^((p-1)/2) mod p
    rng = random.Random(271828)
    primes = [3, 5, 7, 11, 13, 101, 997]
    for p in primes:
        for _ in range(20):
            a = rng.randint(1, 10**6)
            euler = pow(a, (p - 1) // 2, p)
            expected = 0 if euler == 0 else (1 if euler == 1 else -1)
            assert jacobi(a, p) == expected
    assert jacobi(3, 13) == pow(3, 6, 13)  # 3 is a quadratic residue mod 13


def test_jacobi_validation():
    with pytest.raises(ValueError):
        jacobi(3, 4)
    with pytest.raises(ValueError):
        jacobi(3, -5)


def test_kronecker_two_and_signs():
    # (a|2) is 0 for even a, +1 for a = 1,7 mod 8, -1 for a = 3,5 mod 8
    assert kronecker(6, 2) == 0
    assert kronecker(7, 2) == 1
    assert kronecker(17, 2) == 1
    assert kronecker(3, 2) == -1
    assert kronecker(5, 2) == -1
    assert kronecker(-1, -1) == -1
    assert kronecker(1, -1) == 1
    assert kronecker(5, 1) == 1


def test_kronecker_is_multiplicative_in_n():
    rng = random.Random(999)
    for _ in range(30):
        a = rng.randint(-40, 40)
        m = rng.randint(1, 60)
        n = rng.randint(1, 60)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


# -- local symbols ----------------------------------------------------------------------


def test_local_symbol_frozen_values():
    two, three, real = Place.finite(2), Place.finite(3), Place.real()
    # (-1,-1): the quaternions; ramified exactly at 2 and infinity
    assert local_hilbert(-1, -1, two) == -1
    assert local_hilbert(-1, -1, real) == -1
    assert local_hilbert(-1, -1, three) == 1
    # (2,3): x^2 - 2y^2 - 3z^2 has (x,y,z)=... no small zero; local values
    assert local_hilbert(2, 3, three) == -1  # 2 is not a square mod 3
    assert local_hilbert(2, 3, real) == 1
    # (a,1-a) = 0 always: a*1 + (1-a)*1 = 1
    for a in (2, 3, -5, Fraction(7, 3)):
        for v in candidate_places(a, 1 - a):
            assert local_hilbert(a, 1 - a, v) == 1


def test_local_symbol_symmetry_and_square_invariance():
    rng = random.Random(424242)
    for _ in range(60):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 10))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 10))
        if a == 0 or b == 0:
            continue
        s = rng.choice((2, 3, 4, 9, Fraction(1, 4)))
        for v in candidate_places(a, b) + candidate_places(a * s * s, b):
            assert local_hilbert(a, b, v) == local_hilbert(b, a, v)
            assert local_hilbert(a, b, v) == local_hilbert(a * s * s, b, v)


def test_local_symbol_bilinearity():
    # (a, b1*b2) == (a, b1)*(a, b2) at every place
    rng = random.Random(7321)
    for _ in range(40):
        a = rng.randint(-30, 30)
        b1 = rng.randint(-30, 30)
        b2 = rng.randint(-30, 30)
        if a == 0 or b1 == 0 or b2 == 0:
            continue
        places = {v for v in candidate_places(a, b1)}
        places |= set(candidate_places(a, b2)) | set(candidate_places(a, b1 * b2))
        for v in places:
            assert local_hilbert(a, b1 * b2, v) == local_hilbert(
                a, b1, v
            ) * local_hilbert(a, b2, v)


def test_local_symbol_rejects_zero():
    with pytest.raises(ValueError):
        local_hilbert(0, 3, Place.real())


# -- global symbols ---------------------------------------------------------------------


def test_global_symbol_known_values():
    assert global_hilbert(-1, -1).to_json() == ["2", "infinity"]
    assert global_hilbert(2, 3).to_json() == ["2", "3"]
    assert global_hilbert(3, 56).to_json() == ["3", "7"]
    assert global_hilbert(2, 7).is_empty  # 3^2 - 2*1^2 = 7
    assert global_hilbert(Fraction(1, 2), Fraction(17, 9)).is_empty


def test_global_symbol_matches_small_isotropy_search():
    # dual route: empty symbol <=> a*x^2 + b*y^2 = z^2 has a small nonzero solution
    def search(a, b, H=60):
        for x in range(H + 1):
            for y in range(H + 1):
                v = a * x * x + b * y * y
                if v < 0 or (x == 0 and y == 0):
                    continue
                r = int(v**0.5)
                for z in (r - 1, r, r + 1):
                    if z >= 0 and z * z == v and (x, y, z) != (0, 0, 0):
                        return True
        return False

    for a in (-5, -2, -1, 2, 3, 5, 6, 7, 10):
        for b in range(-10, 11):
            if b == 0:
                continue
            assert global_hilbert(a, b).is_empty == search(a, b)


def test_candidate_places_cover_ramification():
    rng = random.Random(1312)
    for _ in range(40):
        a = Fraction(rng.randint(-99, 99), rng.randint(1, 20))
        b = Fraction(rng.randint(-99, 99), rng.randint(1, 20))
        if a == 0 or b == 0:
            continue
        cands = candidate_places(a, b)
        assert Place.real() in cands
        assert Place.finite(2) in cands
        for v in global_hilbert(a, b):
            assert v in cands
