import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superelliptic import (Differential, ExprSyntaxError, GradeOverflow, RingElement, BadParameter,
                           derive, make_curve, mul_form, parse_curve, parse_differential,
                           parse_element, parse_expression)
from superelliptic.randgen import random_differential, random_element

from conftest import CURVES, elements

T = RingElement.monomial
ELL = CURVES[0]


def test_element_example():
    got = parse_element("3/2*t^-2*u + t^4 - u^2")
    assert got == T(-2, 1, Fraction(3, 2)) + T(4) - T(0, 2)


def test_u_power_reduced_in_context():
    # u^2 = t^3 - t^2 + t on the elliptic curve
    assert parse_element("t*u^2", ELL) == T(4) - T(3) + T(2)
    assert parse_element("u^3", ELL) == T(3, 1) - T(2, 1) + T(1, 1)


def test_differential_examples():
    w = parse_differential("t^-1 dt", ELL)
    assert w == Differential({(-1, 0): 1}) and not w.du_terms
    w = parse_differential("3/2*t^2*u d(t^-1*u)", ELL)
    f, g = T(2, 1, Fraction(3, 2)), T(-1, 1)
    assert w == mul_form(f, derive(g), ELL)
    assert parse_differential("-du + 2 dt", ELL) == Differential({(0, 0): 2}, {(0, 0): -1})


def test_parse_expression_dispatch():
    assert isinstance(parse_expression("t + u", ELL), RingElement)
    assert isinstance(parse_expression("t du", ELL), Differential)


@pytest.mark.parametrize("src,col", [("t^^2", 3), ("t + ", 5), ("3/", 3), ("t * x", 5), ("(t)", 1)])
def test_syntax_errors_have_columns(src, col):
    with pytest.raises(ExprSyntaxError) as ei:
        parse_element(src)
    assert ei.value.col == col and ei.value.line == 1


def test_error_on_second_line():
    with pytest.raises(ExprSyntaxError) as ei:
        parse_element("t +\n  ^2")
    assert (ei.value.line, ei.value.col) == (2, 3)


def test_missing_d_target():
    with pytest.raises(ExprSyntaxError):
        parse_differential("t^2", ELL)


def test_negative_u_power():
    with pytest.raises(GradeOverflow):
        parse_element("u^-1", ELL)


def test_curve_parsing():
    assert parse_curve(2, "t^3 - t^2 + t") == ELL
    with pytest.raises(GradeOverflow):
        parse_curve(2, "t^2 + u")
    with pytest.raises(BadParameter):
        parse_curve(2, "t^2 + t^-1")


def test_round_trip_random_elements():
    rng = random.Random(2024)
    for _ in range(100):
        f = random_element(rng, 3)
        s = str(f)
        assert str(parse_element(s)) == s
        assert parse_element(s) == f


def test_round_trip_random_differentials():
    rng = random.Random(99)
    for _ in range(100):
        c = CURVES[rng.randrange(len(CURVES))]
        w = random_differential(rng, c.m)
        assert parse_differential(str(w), c) == w


@given(elements(4, lo=-9, hi=9, max_size=6))
def test_round_trip_property(f):
    assert parse_element(str(f)) == f
