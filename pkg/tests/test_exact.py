from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from clausen.exact import (
    as_rational,
    binomial,
    chebyshev_weight,
    format_rational,
    is_nonpositive_integer,
    orthogonality_H,
    parse_rational,
    pochhammer_product,
    rising_factorial,
    stirling2,
)
from conftest import rationals


@pytest.mark.parametrize(
    "text, expected",
    [("3", Fraction(3)), ("-2/7", Fraction(-2, 7)), (" 4/6 ", Fraction(2, 3)), ("0", Fraction(0)), ("-0/5", Fraction(0))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "1e3", "1/-2", "1/0", "", "a/b", "--1", "1/2/3", "+1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(rationals(50))
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/4") == Fraction(3, 4)


def test_rising_factorial_values():
    assert rising_factorial(Fraction(1, 2), 3) == Fraction(15, 8)
    assert rising_factorial(5, 0) == 1
    assert rising_factorial(1, 6) == factorial(6)
    assert rising_factorial(-3, 4) == 0
    assert rising_factorial(-3, 3) == -6
    with pytest.raises(ValueError):
        rising_factorial(1, -1)


@given(rationals(), st.integers(0, 12), st.integers(0, 12))
def test_rising_factorial_splits(x, j, k):
    assert rising_factorial(x, j + k) == rising_factorial(x, j) * rising_factorial(x + j, k)


@given(rationals(), st.integers(0, 10))
def test_rising_factorial_reflection(x, k):
    # (x)_k = (-1)^k (1-x-k)_k
    assert rising_factorial(x, k) == (-1) ** k * rising_factorial(1 - x - k, k)


@given(rationals(), st.integers(0, 10))
def test_legendre_duplication(x, k):
    # (2x)_{2k} = 4^k (x)_k (x+1/2)_k
    assert rising_factorial(2 * x, 2 * k) == 4**k * rising_factorial(x, k) * rising_factorial(x + Fraction(1, 2), k)


def test_pochhammer_product():
    assert pochhammer_product([Fraction(1, 2), 2], 2) == Fraction(3, 4) * 6
    assert pochhammer_product([], 5) == 1


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0
    assert all(binomial(n, k) == comb(n, k) for n in range(15) for k in range(n + 1))


def test_stirling2_table():
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(3, 5) == 0
    assert [stirling2(6, k) for k in range(7)] == [0, 1, 31, 90, 65, 15, 1]


def test_stirling2_recurrence():
    for n in range(1, 20):
        for k in range(1, n + 1):
            assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_stirling2_counts_surjections():
    # k! S(n,k) counts surjections of an n-set onto a k-set
    for n in range(8):
        for k in range(n + 1):
            surj = sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1))
            assert factorial(k) * stirling2(n, k) == surj


def test_chebyshev_weight():
    assert chebyshev_weight(4, 0) == 1
    assert chebyshev_weight(4, 1) == Fraction(4, 3) * 3
    assert chebyshev_weight(4, 2) == 2


@pytest.mark.parametrize("k", range(1, 21))
def test_orthogonality_exhaustive(k):
    for ell in range(k + 1):
        expected = Fraction(1) if ell in (0, k) else Fraction(0)
        assert orthogonality_H(ell, k) == expected, (ell, k)


def test_orthogonality_domain():
    with pytest.raises(ValueError):
        orthogonality_H(0, 0)
    with pytest.raises(ValueError):
        orthogonality_H(5, 4)
    with pytest.raises(ValueError):
        orthogonality_H(-1, 4)


def test_orthogonality_examples():
    assert orthogonality_H(1, 2) == 0
    assert orthogonality_H(3, 3) == 1
    assert orthogonality_H(0, 7) == 1


def test_is_nonpositive_integer():
    assert is_nonpositive_integer(Fraction(0))
    assert is_nonpositive_integer(Fraction(-3))
    assert not is_nonpositive_integer(Fraction(1))
    assert not is_nonpositive_integer(Fraction(-1, 2))
