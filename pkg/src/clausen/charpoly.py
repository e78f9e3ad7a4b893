"""Characteristic polynomials of the extended Clausen product formulas.

``P_{2m}^{a,b}`` perturbs the 3F2 on the right of

    2F1(a, b; c | x)^2 = F(2a, 2b, a+b; c, 2a+2b+2m | P_{2m}^{a,b} | x),
    c = a + b + m + 1/2,

and ``hat P_{2m+s}`` does the same for the product of the 2F1 with its
perturbation by a degree-``s`` polynomial ``F_s``.  Each polynomial is
built by two independent routes (closed-form expansion and interpolation
through summation values) so the routes can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from clausen.exact import (
    as_rational,
    chebyshev_weight,
    format_rational,
    is_nonpositive_integer,
    rising_factorial,
    stirling2,
)
from clausen.poly import RatPoly, interpolate, rising_poly, shift
from clausen.series import DegenerateParameter, SeriesSpec, terminating_sum_unity

HALF = Fraction(1, 2)


class DegenerateParams(DegenerateParameter):
    """Parameters for which a construction divides by zero."""


@dataclass(frozen=True)
class ClausenParams:
    a: Fraction
    b: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"m must be a non-negative integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))

    @property
    def c(self) -> Fraction:
        """Bottom parameter ``a + b + m + 1/2`` of the Gauss function."""
        return self.a + self.b + self.m + HALF

    def shifted(self, j: int) -> ClausenParams:
        """``(a + j, b + j, m - j)``, the parameters of the j-th derivative square."""
        return ClausenParams(self.a + j, self.b + j, self.m - j)

    def gauss(self) -> SeriesSpec:
        return SeriesSpec((self.a, self.b), (self.c,))

    def product_spec(self) -> SeriesSpec:
        """The 3F2 ``(2a, 2b, a+b; c, 2a+2b+2m)`` on the product side."""
        a, b, m = self.a, self.b, self.m
        return SeriesSpec((2 * a, 2 * b, a + b), (self.c, 2 * a + 2 * b + 2 * m))

    def as_dict(self) -> dict[str, str]:
        return {"a": format_rational(self.a), "b": format_rational(self.b), "m": str(self.m)}

    def validate(self) -> None:
        a, b, m = self.a, self.b, self.m
        if is_nonpositive_integer(self.c):
            raise DegenerateParams(f"c = a+b+m+1/2 = {format_rational(self.c)} is a non-positive integer")
        if is_nonpositive_integer(2 * a + 2 * b + 2 * m):
            raise DegenerateParams("2a+2b+2m is a non-positive integer")
        for name, value in (("(a+b)_m", a + b), ("(a+1/2)_m", a + HALF), ("(b+1/2)_m", b + HALF)):
            if not rising_factorial(value, m):
                raise DegenerateParams(f"{name} vanishes")
        for name, value in (("(1-a-m)_m", 1 - a - m), ("(1-b-m)_m", 1 - b - m)):
            if not rising_factorial(value, m):
                raise DegenerateParams(f"{name} vanishes")


def perturbation_poly(sigma: Sequence) -> RatPoly:
    """``F_s(y) = sum sigma_n y^n`` from its coefficients, lowest first."""
    sigma = [as_rational(x) for x in sigma]
    if not sigma:
        raise ValueError("sigma must contain at least one coefficient")
    if not sigma[-1]:
        raise ValueError("leading coefficient sigma_s must be nonzero")
    return RatPoly(sigma)


def identity_valid(params: ClausenParams, sigma: Sequence | RatPoly) -> bool:
    """Whether the perturbed product formula is claimed for this degree."""
    s = sigma.degree if isinstance(sigma, RatPoly) else len(sigma) - 1
    return s <= 2 * params.m + 1


def char_poly(params: ClausenParams) -> RatPoly:
    """``P_{2m}^{a,b}(t)`` expanded in the polynomial ring.

    Sum over ``j = 0..m`` of
    ``C(m,j) (-1)^j (a)_m (b)_m / ((a+b)_m (a+1/2)_m (b+1/2)_m)``
    times ``(a+b+t/2+j)_{m-j} (-t/2)_j`` times the terminating
    ``3F2(-m+j, (1-t)/2-a-b-m, 1/2; 1-a-m, 1-b-m)``, whose terms are
    polynomials in ``t``.
    """
    params.validate()
    return _char_poly(params.a, params.b, params.m)


@lru_cache(maxsize=512)
def _char_poly(a: Fraction, b: Fraction, m: int) -> RatPoly:
    scale = (
        rising_factorial(a, m)
        * rising_factorial(b, m)
        / (rising_factorial(a + b, m) * rising_factorial(a + HALF, m) * rising_factorial(b + HALF, m))
    )
    inner_top = RatPoly.linear(-HALF, HALF - a - b - m)  # (1-t)/2 - a - b - m
    # terms of the inner 3F2 are shared between j: term_i = (-m+j)_i (...)_i (1/2)_i / ((1-a-m)_i (1-b-m)_i i!)
    inner_rising = [RatPoly.constant(1)]
    for i in range(m):
        inner_rising.append(inner_rising[-1] * (inner_top + i))
    total = RatPoly()
    for j in range(m + 1):
        inner = RatPoly()
        for i in range(m - j + 1):
            coef = (
                rising_factorial(-m + j, i)
                * rising_factorial(HALF, i)
                / (rising_factorial(1 - a - m, i) * rising_factorial(1 - b - m, i) * rising_factorial(1, i))
            )
            inner = inner + inner_rising[i] * coef
        outer = rising_poly(RatPoly.linear(HALF, a + b + j), m - j) * rising_poly(RatPoly.linear(-HALF, 0), j)
        total = total + outer * inner * (comb(m, j) * (-1) ** j * scale)
    return total


def summation_ratio(params: ClausenParams, k: int) -> Fraction:
    """``(2a)_k (2b)_k (a+b)_k / ((a)_k (b)_k (2a+2b+2m)_k)``.

    The terminating 4F3 at index ``k`` equals this ratio times the
    characteristic polynomial at ``k``.
    """
    a, b, m = params.a, params.b, params.m
    den = rising_factorial(a, k) * rising_factorial(b, k) * rising_factorial(2 * a + 2 * b + 2 * m, k)
    num = rising_factorial(2 * a, k) * rising_factorial(2 * b, k) * rising_factorial(a + b, k)
    if not den:
        raise DegenerateParams(f"(a)_k (b)_k (2a+2b+2m)_k vanishes at k={k}")
    return num / den


def square_sum_spec(params: ClausenParams, k: int) -> SeriesSpec:
    """``4F3(-k, a, b, 1/2-k-a-b-m; a+b+m+1/2, 1-a-k, 1-b-k)`` at unit argument."""
    a, b, m = params.a, params.b, params.m
    return SeriesSpec((-k, a, b, HALF - k - a - b - m), (params.c, 1 - a - k, 1 - b - k))


def _node_value(params: ClausenParams, k: int, perturb: RatPoly | None) -> Fraction:
    ratio = summation_ratio(params, k)
    if not ratio:
        raise DegenerateParams(f"(2a)_k (2b)_k (a+b)_k vanishes at k={k}; node value cannot be isolated")
    try:
        total = terminating_sum_unity(square_sum_spec(params, k).perturbed(perturb))
    except DegenerateParameter as exc:
        raise DegenerateParams(str(exc)) from exc
    return total / ratio


def char_poly_via_interpolation(params: ClausenParams) -> RatPoly:
    """``P_{2m}^{a,b}`` interpolated from its values at ``k = 0..2m``.

    Each value is the terminating 4F3 sum divided by ``summation_ratio``.
    """
    params.validate()
    return interpolate([_node_value(params, k, None) for k in range(2 * params.m + 1)])


@dataclass(frozen=True)
class RecurrenceCoeffs:
    beta0: Fraction
    beta1: Fraction


def recurrence_coeffs(params: ClausenParams, n: int) -> RecurrenceCoeffs:
    """Coefficients of ``P(n+1) = beta0(n) P(n) + beta1(n) P(n-1)``."""
    a, b, c = params.a, params.b, params.c
    den = (2 * a + n) * (2 * b + n) * (a + b + n)
    if not den:
        raise DegenerateParams(f"(2a+n)(2b+n)(a+b+n) vanishes at n={n}")
    num0 = (
        2 * n**3
        + 3 * (a + b + c - 1) * n**2
        + ((a + b) * (4 * c - 3) + 4 * a * b - c + 1) * n
        + 2 * a * b * (2 * c - 1)
    )
    num1 = -n * (c + n - 1) * (2 * c - 2 + n)
    return RecurrenceCoeffs(num0 / den, num1 / den)


def hat_poly_direct(params: ClausenParams, sigma: Sequence | RatPoly) -> RatPoly:
    """``hat P_{2m+s}`` from the closed-form Stirling/Chebyshev expansion.

    ``sigma_0 P_{2m}^{a,b}(t)`` plus, for ``n = 1..s`` and ``k = 1..n``,
    ``sigma_n/2 (-1)^k S(n,k) sum_j k/(k-j) C(k-j,j) A_j(t) (-t)_k
    P_{2m-2j}^{a+j,b+j}(t-2j)`` with
    ``A_j(t) = (a)_j (b)_j (a+b+m)_j (1/2-a-b-m-t)_j / (4^j (a+1/2)_j (b+1/2)_j (a+b)_{2j})``.

    Only defined for ``s <= 2m+1``; beyond that the inner sum would need
    ``P`` of negative degree.
    """
    fs = sigma if isinstance(sigma, RatPoly) else perturbation_poly(sigma)
    s = fs.degree
    if not identity_valid(params, fs):
        raise ValueError(f"closed form needs s <= 2m+1 (s={s}, m={params.m})")
    a, b, m = params.a, params.b, params.m
    result = char_poly(params) * fs.coefficient(0)
    if s < 1:
        return result
    minus_t = RatPoly.linear(-1, 0)
    for k in range(1, s + 1):
        weight = sum((fs.coefficient(n) * stirling2(n, k) for n in range(k, s + 1)), Fraction(0))
        if not weight:
            continue
        inner = RatPoly()
        for j in range(k // 2 + 1):
            den = (
                4**j
                * rising_factorial(a + HALF, j)
                * rising_factorial(b + HALF, j)
                * rising_factorial(a + b, 2 * j)
            )
            if not den:
                raise DegenerateParams(f"(a+1/2)_j (b+1/2)_j (a+b)_2j vanishes at j={j}")
            coef = (
                chebyshev_weight(k, j)
                * rising_factorial(a, j)
                * rising_factorial(b, j)
                * rising_factorial(a + b + m, j)
                / den
            )
            if not coef:
                continue
            lower = shift(char_poly(params.shifted(j)), -2 * j)
            inner = inner + rising_poly(RatPoly.linear(-1, HALF - a - b - m), j) * lower * coef
        result = result + rising_poly(minus_t, k) * inner * (weight * (-1) ** k / 2)
    return result


def hat_poly_interp(params: ClausenParams, sigma: Sequence | RatPoly) -> RatPoly:
    """``hat P_{2m+s}`` interpolated from perturbed 4F3 sums at ``k = 0..2m+s``.

    Well defined for every ``s``; the product formula it feeds is only
    claimed when ``identity_valid`` holds.
    """
    fs = sigma if isinstance(sigma, RatPoly) else perturbation_poly(sigma)
    params.validate()
    n = 2 * params.m + fs.degree
    return interpolate([_node_value(params, k, fs) for k in range(n + 1)])


def quadratic_hat_poly(params: ClausenParams, f) -> RatPoly:
    """Closed form of ``hat P_{2m+2}`` for ``F_2(y) = (f+y)(f+1+y)/(f(f+1))``, ``m >= 1``.

    ``(1 + (2f+1) t/(2f(f+1)) + t^2/(2f(f+1))) P_{2m}^{a,b}(t)
    - ab(a+b+m)(a+b+m-1/2+t) t(t-1) / (f(f+1)(2a+1)(2b+1)(a+b)_2) P_{2m-2}^{a+1,b+1}(t-2)``.
    """
    f = as_rational(f)
    a, b, m = params.a, params.b, params.m
    if m < 1:
        raise ValueError("the quadratic closed form needs m >= 1")
    ff = f * (f + 1)
    first = RatPoly([1, (2 * f + 1) / (2 * ff), 1 / (2 * ff)]) * char_poly(params)
    coef = a * b * (a + b + m) / (ff * (2 * a + 1) * (2 * b + 1) * rising_factorial(a + b, 2))
    t_factor = RatPoly.linear(1, a + b + m - HALF) * RatPoly([0, -1, 1])
    second = t_factor * shift(char_poly(params.shifted(1)), -2) * coef
    return first - second
