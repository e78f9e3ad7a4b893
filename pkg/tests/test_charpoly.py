from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from clausen.charpoly import (
    ClausenParams,
    DegenerateParams,
    char_poly,
    char_poly_via_interpolation,
    hat_poly_direct,
    hat_poly_interp,
    identity_valid,
    perturbation_poly,
    quadratic_hat_poly,
    recurrence_coeffs,
)
from clausen.poly import RatPoly
from clausen.series import DegenerateParameter
from conftest import non_integer_rationals, rationals

HALF = Fraction(1, 2)


def valid(a, b, m):
    params = ClausenParams(a, b, m)
    try:
        params.validate()
        char_poly_via_interpolation(params)
    except DegenerateParameter:
        return None
    return params


def example1_quadratic(a, b):
    """The m = 1 closed form, written in the variable -t and mapped back to P(t)."""
    const = 2 * (a + b) * (2 * a + 1) * (2 * b + 1)
    return RatPoly([const, 4 * a + 4 * b + 1 + 8 * a * b, 1]) / const


def test_half_half_m1():
    p = char_poly(ClausenParams(HALF, HALF, 1))
    assert p == RatPoly([8, 7, 1]) / 8
    assert p.to_strings() == ["1", "7/8", "1/8"]
    assert char_poly_via_interpolation(ClausenParams(HALF, HALF, 1)) == p


@pytest.mark.parametrize("a, b", [(HALF, HALF), (Fraction(1, 3), Fraction(1, 5)), (Fraction(-2, 7), Fraction(5, 2))])
def test_m0_is_one(a, b):
    params = ClausenParams(a, b, 0)
    assert char_poly(params) == RatPoly.constant(1)
    assert char_poly_via_interpolation(params) == RatPoly.constant(1)


@given(non_integer_rationals(), non_integer_rationals())
def test_example1_quadratic(a, b):
    assume(a + b != 0)
    params = valid(a, b, 1)
    assume(params is not None)
    assert char_poly(params) == example1_quadratic(a, b)


@settings(max_examples=15)
@given(non_integer_rationals(), non_integer_rationals(), st.integers(0, 4))
def test_structure(a, b, m):
    params = valid(a, b, m)
    assume(params is not None)
    p = char_poly(params)
    assert p(0) == 1
    assert p.degree == 2 * m
    assert p == char_poly_via_interpolation(params)
    assert p == char_poly(ClausenParams(b, a, m))


def test_recurrence_example():
    params = ClausenParams(HALF, HALF, 1)
    p = char_poly(params)
    assert p(2) == Fraction(26, 8)
    beta = recurrence_coeffs(params, 1)
    assert p(2) == beta.beta0 * p(1) + beta.beta1 * p(0)


@settings(max_examples=10)
@given(non_integer_rationals(), non_integer_rationals(), st.integers(0, 3))
def test_recurrence_holds(a, b, m):
    params = valid(a, b, m)
    assume(params is not None)
    p = char_poly(params)
    for n in range(1, 31):
        try:
            beta = recurrence_coeffs(params, n)
        except DegenerateParams:
            continue
        assert p(n + 1) == beta.beta0 * p(n) + beta.beta1 * p(n - 1)


@given(non_integer_rationals(), non_integer_rationals(), st.integers(1, 30))
def test_recurrence_m0_weights_sum_to_one(a, b, n):
    try:
        beta = recurrence_coeffs(ClausenParams(a, b, 0), n)
    except DegenerateParams:
        assume(False)
    assert beta.beta0 + beta.beta1 == 1


def test_hat_s0_is_char_poly():
    params = ClausenParams(Fraction(1, 3), Fraction(1, 4), 2)
    assert hat_poly_direct(params, [1]) == char_poly(params)
    assert hat_poly_interp(params, [1]) == char_poly(params)
    assert hat_poly_direct(params, [Fraction(5, 2)]) == char_poly(params) * Fraction(5, 2)


def test_hat_m1_s2_dual_route():
    params = ClausenParams(Fraction(1, 3), Fraction(1, 4), 1)
    sigma = [Fraction(2, 7), Fraction(-3, 5), Fraction(4, 9)]
    direct = hat_poly_direct(params, sigma)
    assert direct == hat_poly_interp(params, sigma)
    assert direct.degree == 4
    assert direct(0) == sigma[0]


@settings(max_examples=20)
@given(
    non_integer_rationals(),
    non_integer_rationals(),
    st.integers(0, 2),
    st.data(),
)
def test_hat_dual_route_property(a, b, m, data):
    params = valid(a, b, m)
    assume(params is not None)
    s = data.draw(st.integers(0, 2 * m + 1))
    sigma = data.draw(st.lists(rationals(), min_size=s + 1, max_size=s + 1))
    assume(sigma[-1] != 0)
    try:
        direct = hat_poly_direct(params, sigma)
        interp = hat_poly_interp(params, sigma)
    except DegenerateParameter:
        assume(False)
    assert direct == interp
    assert direct.degree == 2 * m + s
    assert direct(0) == sigma[0]


@pytest.mark.parametrize("m", [0, 1, 2])
@pytest.mark.parametrize("f", [Fraction(1, 3), Fraction(-5, 4), Fraction(7, 2)])
def test_linear_perturbation_closed_form(m, f):
    params = ClausenParams(Fraction(2, 5), Fraction(-1, 3), m)
    sigma = [1, 1 / f]
    expected = char_poly(params) * RatPoly([2 * f, 1]) / (2 * f)
    assert hat_poly_direct(params, sigma) == expected
    assert hat_poly_interp(params, sigma) == expected


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("f", [Fraction(1, 3), Fraction(-7, 4), Fraction(5, 2)])
def test_quadratic_perturbation_closed_form(m, f):
    params = ClausenParams(Fraction(2, 5), Fraction(-1, 3), m)
    ff = f * (f + 1)
    sigma = [1, (2 * f + 1) / ff, 1 / ff]
    assert hat_poly_direct(params, sigma) == quadratic_hat_poly(params, f)
    with pytest.raises(ValueError):
        quadratic_hat_poly(ClausenParams(HALF, HALF, 0), f)


def test_identity_valid_and_bounds():
    params = ClausenParams(Fraction(1, 4), Fraction(2, 3), 0)
    assert identity_valid(params, [1, 1])
    assert not identity_valid(params, [1, 1, 1])
    with pytest.raises(ValueError):
        hat_poly_direct(params, [1, 1, 1])
    beyond = hat_poly_interp(params, [1, 1, 1])
    assert beyond.degree == 2


def test_perturbation_poly_validation():
    assert perturbation_poly([1, 2]) == RatPoly([1, 2])
    with pytest.raises(ValueError):
        perturbation_poly([])
    with pytest.raises(ValueError):
        perturbation_poly([1, 0])


@pytest.mark.parametrize(
    "a, b, m",
    [
        (Fraction(-1, 2), 1, 1),  # (a+1/2)_m = 0
        (Fraction(1, 3), Fraction(-1, 3), 1),  # (a+b)_m = 0
        (-1, Fraction(1, 3), 2),  # (1-a-m)_m = 0
        (Fraction(-3, 4), Fraction(-3, 4), 1),  # c = 0
    ],
)
def test_degenerate_params(a, b, m):
    with pytest.raises(DegenerateParams):
        char_poly(ClausenParams(a, b, m))


def test_params_reject_bad_input():
    with pytest.raises((TypeError, ValueError)):
        ClausenParams(0.5, HALF, 1)
    with pytest.raises(ValueError):
        ClausenParams(HALF, HALF, -1)
    assert ClausenParams(HALF, Fraction(1, 4), 1).c == Fraction(9, 4)
