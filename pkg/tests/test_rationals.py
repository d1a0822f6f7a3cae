"""Exact rational scalar helpers."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conicert.rationals import (
    format_rat,
    int_sqrt_exact,
    is_square,
    rat,
    squarefree_kernel_int,
)

rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**4
)


def test_rat_parses_int_fraction_and_string():
    assert rat(3) == Fraction(3)
    assert rat(Fraction(2, 4)) == Fraction(1, 2)
    assert rat("-7/3") == Fraction(-7, 3)
    assert rat(" 5 ") == Fraction(5)


def test_rat_rejects_garbage():
    with pytest.raises(ValueError):
        rat("two")


def test_format_rat():
    assert format_rat(Fraction(5)) == "5"
    assert format_rat(Fraction(-3, 7)) == "-3/7"
    assert format_rat(Fraction(4, 2)) == "2"


@given(rationals)
def test_format_round_trips(q):
    assert rat(format_rat(q)) == q


def test_int_sqrt_exact():
    assert int_sqrt_exact(0) == 0
    assert int_sqrt_exact(144) == 12
    assert int_sqrt_exact(145) is None
    assert int_sqrt_exact(-4) is None
    big = 10**40
    assert int_sqrt_exact(big * big) == big


def test_is_square_known_values():
    assert is_square(0) == 0
    assert is_square(1) == 1
    assert is_square(Fraction(9, 4)) == Fraction(3, 2)
    assert is_square(Fraction(49, 81)) == Fraction(7, 9)
    for q in (2, 3, -4, Fraction(1, 2), Fraction(8, 9)):
        assert is_square(q) is None


@given(rationals)
def test_square_of_anything_is_recognized(q):
    assert is_square(q * q) == abs(q)


@given(rationals)
def test_squarefree_kernel_has_same_square_class(q):
    kernel = squarefree_kernel_int(q)
    if q == 0:
        assert kernel == 0
    else:
        assert isinstance(kernel, int)
        # q / kernel is a square, so q and kernel differ by a square factor
        assert is_square(q / kernel) is not None
