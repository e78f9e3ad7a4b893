from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from clausen.charpoly import ClausenParams, char_poly, square_sum_spec, summation_ratio
from clausen.poly import RatPoly
from clausen.series import (
    DegenerateParameter,
    NonTerminating,
    SeriesSpec,
    TruncatedSeries,
    cauchy_product,
    derivative,
    hyper_term,
    series_coeffs,
    terminating_sum_unity,
    termination_index,
    theta,
)
from conftest import non_integer_rationals, rationals

HALF = Fraction(1, 2)
series_windows = st.lists(rationals(), min_size=1, max_size=10).map(TruncatedSeries)


def test_gauss_first_terms():
    a, b, c = Fraction(1, 3), Fraction(2, 5), Fraction(7, 4)
    coeffs = series_coeffs(SeriesSpec((a, b), (c,)), 3)
    assert coeffs[0] == 1
    assert coeffs[1] == a * b / c
    assert coeffs[2] == a * (a + 1) * b * (b + 1) / (c * (c + 1) * 2)


def test_geometric_and_theta_perturbation():
    spec = SeriesSpec((1,), ())
    assert list(series_coeffs(spec, 6)) == [1] * 7
    assert list(series_coeffs(spec.perturbed(RatPoly.t()), 6)) == list(range(7))


@given(
    st.lists(non_integer_rationals(), min_size=0, max_size=3),
    st.lists(non_integer_rationals(), min_size=0, max_size=3),
)
def test_ratio_generation_matches_direct_terms(top, bottom):
    coeffs = series_coeffs(SeriesSpec(top, bottom), 50)
    for k in (0, 1, 2, 7, 23, 50):
        assert coeffs[k] == hyper_term(top, bottom, k)


def test_terminating_top_gives_zero_tail():
    coeffs = series_coeffs(SeriesSpec((-3, HALF), (Fraction(1, 3),)), 10)
    assert all(c == 0 for c in coeffs.coeffs[4:])
    assert coeffs[3] != 0


@given(rationals(), rationals(), st.lists(rationals(), min_size=1, max_size=4), st.lists(rationals(), min_size=1, max_size=4))
def test_perturbation_is_linear(a, b, p1, p2):
    spec = SeriesSpec((a + HALF / 7, b), (Fraction(5, 3),))
    P1, P2 = RatPoly(p1), RatPoly(p2)
    lhs = series_coeffs(spec.perturbed(P1 + P2), 15)
    rhs = series_coeffs(spec.perturbed(P1), 15) + series_coeffs(spec.perturbed(P2), 15)
    assert lhs == rhs


@given(st.lists(rationals(), min_size=1, max_size=4))
def test_theta_multiplies_perturbation_by_t(p):
    spec = SeriesSpec((Fraction(2, 3), Fraction(-1, 4)), (Fraction(3, 5),))
    P = RatPoly(p)
    assert theta(series_coeffs(spec.perturbed(P), 20)) == series_coeffs(spec.perturbed(P * RatPoly.t()), 20)


def test_constant_perturbation_reduces_to_plain():
    spec = SeriesSpec((Fraction(1, 3),), (Fraction(4, 3),))
    assert series_coeffs(spec.perturbed(RatPoly.constant(1)), 12) == series_coeffs(spec, 12)


def test_cauchy_product_examples():
    ones = TruncatedSeries([1] * 6)
    assert list(cauchy_product(ones, ones)) == [1, 2, 3, 4, 5, 6]
    f = TruncatedSeries([3, Fraction(1, 2), -1])
    assert cauchy_product(f, TruncatedSeries.one(3)) == f


@given(series_windows, series_windows, series_windows)
def test_cauchy_product_ring_laws(f, g, h):
    n = min(len(f), len(g), len(h))
    assert f * g == g * f
    assert ((f * g) * h).truncate(n) == (f * (g * h)).truncate(n)
    assert (f * (g + h)).truncate(n) == (f * g + f * h).truncate(n)


def test_mismatched_lengths_truncate():
    assert len(TruncatedSeries([1, 2, 3]) + TruncatedSeries([1])) == 1
    assert len(TruncatedSeries([1, 2, 3]) * TruncatedSeries([1, 1])) == 2


def test_derivative_and_theta_examples():
    assert list(derivative(TruncatedSeries([1, 1, 1]))) == [1, 2]
    assert list(derivative(TruncatedSeries([5, 0, 0]))) == [0, 0]
    assert list(theta(TruncatedSeries([1, 1, 1]))) == [0, 1, 2]


@given(series_windows)
def test_theta_squared(f):
    assert list(theta(theta(f))) == [k * k * c for k, c in enumerate(f)]


@given(series_windows)
def test_theta_is_x_times_derivative(f):
    if len(f) < 2:
        return
    assert theta(f) == TruncatedSeries([0, *derivative(f)])


def test_derivative_product_rule_on_geometric():
    g = TruncatedSeries([1] * 11)
    tg = theta(g)
    # d(x g') = g' + x g''
    lhs = derivative(tg)
    rhs = derivative(g) + TruncatedSeries([0, *derivative(derivative(g))])
    assert lhs.truncate(9) == rhs.truncate(9)


def test_times_x_power():
    f = TruncatedSeries([1, 2, 3])
    assert list(f.times_x_power(1)) == [0, 1, 2]
    assert list(f.times_x_power(5)) == [0, 0, 0]


def test_clausen_first_coefficient():
    g = series_coeffs(SeriesSpec((HALF, HALF), (Fraction(3, 2),)), 1)
    sq = g * g
    rhs = series_coeffs(SeriesSpec((1, 1, 1), (Fraction(3, 2), 2)), 1)
    assert sq[1] == rhs[1] == Fraction(1, 3)


def test_terminating_sums():
    b, c = Fraction(2, 3), Fraction(7, 5)
    assert terminating_sum_unity(SeriesSpec((-1, b), (c,))) == 1 - b / c
    assert terminating_sum_unity(SeriesSpec((0, b), (c,)).perturbed(RatPoly([5, 1]))) == 5


@given(st.integers(0, 8), non_integer_rationals(), non_integer_rationals())
def test_chu_vandermonde(n, b, c):
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    from clausen.exact import rising_factorial

    assert terminating_sum_unity(SeriesSpec((-n, b), (c,))) == rising_factorial(c - b, n) / rising_factorial(c, n)


def test_terminating_uses_smallest_index():
    assert termination_index([Fraction(-4), HALF, Fraction(-2)]) == 2
    assert termination_index([HALF]) is None
    # inner zeros from the larger negative integer never divide
    value = terminating_sum_unity(SeriesSpec((-2, -4, HALF), (Fraction(1, 3), Fraction(5, 7))))
    direct = sum(hyper_term((-2, -4, HALF), (Fraction(1, 3), Fraction(5, 7)), j) for j in range(3))
    assert value == direct


def test_clausen_4f3_sum_at_k1():
    spec = SeriesSpec((-1, HALF, HALF, Fraction(-5, 2)), (Fraction(5, 2), HALF, HALF))
    params = ClausenParams(HALF, HALF, 1)
    assert terminating_sum_unity(spec) == 2
    assert terminating_sum_unity(square_sum_spec(params, 1)) == 2
    assert summation_ratio(params, 1) * char_poly(params)(1) == 2


def test_errors():
    with pytest.raises(NonTerminating):
        terminating_sum_unity(SeriesSpec((HALF, HALF), (Fraction(3, 2),)))
    with pytest.raises(DegenerateParameter):
        series_coeffs(SeriesSpec((HALF,), (-2,)), 5)
    with pytest.raises(DegenerateParameter):
        hyper_term((HALF,), (-1,), 3)
    with pytest.raises(DegenerateParameter):
        terminating_sum_unity(SeriesSpec((-3, HALF), (-1,)))
    # the vanishing factor sits beyond the window, so this is fine
    assert len(series_coeffs(SeriesSpec((HALF,), (-5,)), 5)) == 6
    with pytest.raises(TypeError):
        SeriesSpec((0.5,), ())
