"""Exact, coefficient-by-coefficient checks of the product and summation identities.

Every check returns a :class:`VerifyReport`.  ``Verified`` means every
compared pair of rationals is exactly equal; there are no tolerances.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Iterable, Sequence

from clausen.charpoly import (
    ClausenParams,
    DegenerateParams,
    char_poly,
    hat_poly_direct,
    hat_poly_interp,
    identity_valid,
    perturbation_poly,
    quadratic_hat_poly,
    recurrence_coeffs,
    square_sum_spec,
    summation_ratio,
)
from clausen.exact import (
    as_rational,
    binomial,
    chebyshev_weight,
    format_rational,
    pochhammer_product,
    rising_factorial,
    stirling2,
)
from clausen.poly import RatPoly
from clausen.series import (
    DegenerateParameter,
    SeriesSpec,
    TruncatedSeries,
    cauchy_product,
    derivative,
    series_coeffs,
    terminating_sum_unity,
    theta,
)


class Status(str, enum.Enum):
    VERIFIED = "Verified"
    DEVIATION = "Deviation"
    DEGENERATE = "Degenerate"
    REFUSED = "Refused"


@dataclass(frozen=True)
class Deviation:
    index: int | str
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {"k": self.index, "lhs": format_rational(self.lhs), "rhs": format_rational(self.rhs)}


@dataclass
class VerifyReport:
    identity: str
    params: dict[str, str]
    terms_checked: int = 0
    status: Status = Status.VERIFIED
    first_deviation: Deviation | None = None
    polynomial: RatPoly | None = None
    note: str | None = None
    rows: list[tuple[int | str, Fraction, Fraction]] = field(default_factory=list, repr=False)

    @property
    def verified(self) -> bool:
        return self.status is Status.VERIFIED

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "terms_checked": self.terms_checked,
            "status": self.status.value,
        }
        if self.first_deviation is not None:
            out["first_deviation"] = self.first_deviation.to_dict()
        if self.polynomial is not None:
            out["polynomial"] = self.polynomial.to_strings()
        if self.note:
            out["note"] = self.note
        return out


def _compare(identity: str, params: dict, pairs: Iterable[tuple[int | str, Fraction, Fraction]], **extra) -> VerifyReport:
    report = VerifyReport(identity, params, **extra)
    for index, lhs, rhs in pairs:
        report.rows.append((index, lhs, rhs))
        report.terms_checked += 1
        if lhs != rhs and report.first_deviation is None:
            report.first_deviation = Deviation(index, lhs, rhs)
            report.status = Status.DEVIATION
    return report


def _series_pairs(lhs: TruncatedSeries, rhs: TruncatedSeries):
    return ((k, x, y) for k, (x, y) in enumerate(zip(lhs, rhs)))


def _guarded(identity: str, params: dict, build: Callable[[], VerifyReport]) -> VerifyReport:
    try:
        return build()
    except DegenerateParameter as exc:
        return VerifyReport(identity, params, status=Status.DEGENERATE, note=str(exc))


def _fmt_list(values) -> str:
    return ",".join(format_rational(v) for v in values)


def _product_report(identity: str, info: dict, params: ClausenParams, fs: RatPoly, hat: RatPoly, N: int) -> VerifyReport:
    gauss = series_coeffs(params.gauss(), N)
    perturbed = series_coeffs(params.gauss().perturbed(fs), N)
    lhs = cauchy_product(gauss, perturbed)
    rhs = series_coeffs(params.product_spec().perturbed(hat), N)
    return _compare(identity, info, _series_pairs(lhs, rhs), polynomial=hat)


def verify_square(params: ClausenParams, N: int) -> VerifyReport:
    """Square of ``2F1(a, b; a+b+m+1/2)`` against the 3F2 perturbed by ``P_{2m}^{a,b}``."""
    info = {**params.as_dict(), "N": str(N)}

    def build():
        poly = char_poly(params)
        gauss = series_coeffs(params.gauss(), N)
        lhs = cauchy_product(gauss, gauss)
        rhs = series_coeffs(params.product_spec().perturbed(poly), N)
        return _compare("square", info, _series_pairs(lhs, rhs), polynomial=poly)

    return _guarded("square", info, build)


def verify_product(params: ClausenParams, sigma: Sequence | RatPoly, N: int) -> VerifyReport:
    """Gauss function times its ``F_s`` perturbation against the 3F2 perturbed by ``hat P``.

    Refused when ``s > 2m + 1``, where no product formula is claimed.
    """
    fs = sigma if isinstance(sigma, RatPoly) else perturbation_poly(sigma)
    info = {**params.as_dict(), "sigma": _fmt_list(fs.coeffs), "N": str(N)}
    if not identity_valid(params, fs):
        return VerifyReport(
            "product",
            info,
            status=Status.REFUSED,
            note=f"s = {fs.degree} exceeds 2m+1 = {2 * params.m + 1}; no product formula is known",
        )
    return _guarded("product", info, lambda: _product_report("product", info, params, fs, hat_poly_direct(params, fs), N))


def verify_product_beyond_bound(params: ClausenParams, sigma: Sequence | RatPoly, N: int | None = None) -> VerifyReport:
    """Substitute the interpolated ``hat P`` even though ``s > 2m + 1``.

    Agreement is forced at ``k <= 2m + s`` by construction; the report's
    ``first_deviation`` shows where it breaks.  ``N`` defaults to ``2m+s+10``.
    """
    fs = sigma if isinstance(sigma, RatPoly) else perturbation_poly(sigma)
    if N is None:
        N = 2 * params.m + fs.degree + 10
    info = {**params.as_dict(), "sigma": _fmt_list(fs.coeffs), "N": str(N)}
    return _guarded(
        "product_beyond_bound",
        info,
        lambda: _product_report("product_beyond_bound", info, params, fs, hat_poly_interp(params, fs), N),
    )


def shifted_sum_spec(params: ClausenParams, k: int) -> SeriesSpec:
    """``4F3(-k, a+1, b, 1/2-k-a-b-m; a+b+m+1/2, 1-k-a, 1-k-b)``."""
    a, b, m = params.a, params.b, params.m
    return SeriesSpec((-k, a + 1, b, Fraction(1, 2) - k - a - b - m), (params.c, 1 - k - a, 1 - k - b))


def shifted_sum_ratio(params: ClausenParams, k: int) -> Fraction:
    """``(2a+1)_k (2b)_k (a+b)_k / ((a)_k (b)_k (2a+2b+2m)_k)``.

    Read off the coefficient of ``x^k`` in ``2F1(a,b;c) 2F1(a+1,b;c)``.
    """
    a, b, m = params.a, params.b, params.m
    den = rising_factorial(a, k) * rising_factorial(b, k) * rising_factorial(2 * a + 2 * b + 2 * m, k)
    if not den:
        raise DegenerateParams(f"(a)_k (b)_k (2a+2b+2m)_k vanishes at k={k}")
    return rising_factorial(2 * a + 1, k) * rising_factorial(2 * b, k) * rising_factorial(a + b, k) / den


def verify_summations(params: ClausenParams, sigma: Sequence | RatPoly, k_max: int) -> VerifyReport:
    """Three terminating 4F3 evaluations for ``k = 0..k_max``.

    Rows are labelled ``plain:k`` (unperturbed sum vs ``P_{2m}``),
    ``perturbed:k`` (``F_s``-perturbed sum vs ``hat P``) and ``shifted:k``
    (top parameter ``a+1`` vs ``P_{2m}``).
    """
    fs = sigma if isinstance(sigma, RatPoly) else perturbation_poly(sigma)
    info = {**params.as_dict(), "sigma": _fmt_list(fs.coeffs), "k_max": str(k_max)}
    if not identity_valid(params, fs):
        return VerifyReport("summations", info, status=Status.REFUSED, note="s exceeds 2m+1")

    def pairs():
        poly = char_poly(params)
        hat = hat_poly_direct(params, fs)
        for k in range(k_max + 1):
            spec = square_sum_spec(params, k)
            ratio = summation_ratio(params, k)
            yield f"plain:{k}", terminating_sum_unity(spec), ratio * poly(k)
            yield f"perturbed:{k}", terminating_sum_unity(spec.perturbed(fs)), ratio * hat(k)
            yield f"shifted:{k}", terminating_sum_unity(shifted_sum_spec(params, k)), shifted_sum_ratio(params, k) * poly(k)

    return _guarded("summations", info, lambda: _compare("summations", info, pairs()))


def verify_whipple(a, b, c, d, e, n: int) -> VerifyReport:
    """Terminating very-well-poised 7F6 against the balanced 4F3 at unit argument."""
    a, b, c, d, e = (as_rational(v) for v in (a, b, c, d, e))
    info = {"a": format_rational(a), "b": format_rational(b), "c": format_rational(c),
            "d": format_rational(d), "e": format_rational(e), "n": str(n)}

    def build():
        very_well_poised = SeriesSpec(
            (a, a / 2 + 1, b, c, d, e, -n), (a / 2, a + 1 - b, a + 1 - c, a + 1 - d, a + 1 - e, a + n + 1)
        )
        balanced = SeriesSpec((-n, a + 1 - d - e, b, c), (b + c - n - a, a + 1 - d, a + 1 - e))
        # an earlier termination could hide a 0/0 at j <= n, so check the whole window
        for bottom in very_well_poised.bottom + balanced.bottom:
            if not rising_factorial(bottom, n):
                raise DegenerateParameter(f"bottom parameter {format_rational(bottom)} vanishes within j <= {n}")
        lhs = terminating_sum_unity(very_well_poised)
        den = rising_factorial(a + 1 - b, n) * rising_factorial(a + 1 - c, n)
        if not den:
            raise DegenerateParameter("(a+1-b)_n (a+1-c)_n vanishes")
        pref = rising_factorial(a + 1, n) * rising_factorial(a + 1 - b - c, n) / den
        rhs = pref * terminating_sum_unity(balanced)
        return _compare("whipple", info, [(n, lhs, rhs)])

    return _guarded("whipple", info, build)


def karlsson_coefficient(base_top, base_bottom, f, mvec, j) -> Fraction:
    """``A(j)`` of the expansion over integral parameter differences."""
    r = len(f)
    value = Fraction(1)
    for mi, ji in zip(mvec, j):
        value *= binomial(mi, ji)
    partial = 0
    for i in range(r):
        # (f_{i+1} + m_{i+1})_{j_1+..+j_i} over (f_i)_{j_1+..+j_i}
        if i > 0:
            value *= rising_factorial(f[i] + mvec[i], partial)
        partial += j[i]
        den = rising_factorial(f[i], partial)
        if not den:
            raise DegenerateParameter(f"(f_{i + 1})_{partial} vanishes")
        value /= den
    total = sum(j)
    den = pochhammer_product(base_bottom, total)
    if not den:
        raise DegenerateParameter("(c)_|j| vanishes")
    return value * pochhammer_product(base_top, total) / den


def verify_karlsson(base_top, base_bottom, f, mvec, N: int) -> VerifyReport:
    """Series with tops ``a, f+m`` and bottoms ``c, f`` against the finite expansion
    ``sum_j A(j) x^|j| F(a+|j|; c+|j| | x)`` to order ``N``.
    """
    base_top = [as_rational(v) for v in base_top]
    base_bottom = [as_rational(v) for v in base_bottom]
    f = [as_rational(v) for v in f]
    mvec = [int(v) for v in mvec]
    if len(f) != len(mvec) or not f:
        raise ValueError("f and mvec must have the same positive length")
    info = {"top": _fmt_list(base_top), "bottom": _fmt_list(base_bottom), "f": _fmt_list(f),
            "mvec": ",".join(map(str, mvec)), "N": str(N)}

    def build():
        lhs = series_coeffs(
            SeriesSpec(base_top + [fi + mi for fi, mi in zip(f, mvec)], base_bottom + f), N
        )
        rhs = TruncatedSeries.zeros(N + 1)
        for j in iproduct(*(range(mi + 1) for mi in mvec)):
            coef = karlsson_coefficient(base_top, base_bottom, f, mvec, j)
            if not coef:
                continue
            shifted = series_coeffs(SeriesSpec(base_top, base_bottom).shifted(sum(j)), N)
            rhs = rhs + shifted.times_x_power(sum(j)).scale(coef)
        return _compare("karlsson", info, _series_pairs(lhs, rhs))

    return _guarded("karlsson", info, build)


def _d(f: TruncatedSeries, order: int) -> TruncatedSeries:
    for _ in range(order):
        f = derivative(f)
    return f


def _pad_times_x(f: TruncatedSeries, k: int, length: int) -> TruncatedSeries:
    """``x^k f`` on a window of ``length`` (``f`` must be long enough to fill it)."""
    coeffs = [Fraction(0)] * k + list(f.coeffs)
    if len(coeffs) < length:
        raise ValueError("series too short for the requested window")
    return TruncatedSeries(coeffs[:length])


def operator_lemma_rhs(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """``1/2 sum_k S(n,k) x^k sum_j (-1)^j k/(k-j) C(k-j,j) d^(k-2j)[(f^(j))^2]``.

    Every coefficient of the returned window is exact: the derivatives
    shorten the window by ``k - j`` and ``x^k`` lengthens it by ``k``.
    """
    length = len(f)
    total = TruncatedSeries.zeros(length)
    for k in range(1, n + 1):
        s = stirling2(n, k)
        if not s:
            continue
        for j in range(k // 2 + 1):
            fj = _d(f, j)
            term = _d(cauchy_product(fj, fj), k - 2 * j)
            weight = Fraction((-1) ** j * s, 2) * chebyshev_weight(k, j)
            total = total + _pad_times_x(term, k, length).scale(weight)
    return total


def verify_operator_lemma(fcoeffs: TruncatedSeries | Sequence, n: int) -> VerifyReport:
    """``f (x d/dx)^n f`` against its Stirling/Chebyshev expansion on the full window."""
    f = fcoeffs if isinstance(fcoeffs, TruncatedSeries) else TruncatedSeries(fcoeffs)
    if n < 1 or len(f) < n + 2:
        raise ValueError("operator lemma needs n >= 1 and at least n+2 coefficients")
    info = {"n": str(n), "length": str(len(f))}
    tf = f
    for _ in range(n):
        tf = theta(tf)
    lhs = cauchy_product(f, tf)
    return _compare("operator_lemma", info, _series_pairs(lhs, operator_lemma_rhs(f, n)))


def operator_examples(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """The spelled-out expansions of ``f (x d/dx)^n f`` for ``n = 1, 2, 3``."""
    length = len(f)
    sq = cauchy_product(f, f)
    d1 = derivative(f)
    dsq = cauchy_product(d1, d1)
    half = Fraction(1, 2)

    def xk(series, k):
        return _pad_times_x(series, k, length)

    first = xk(_d(sq, 1), 1).scale(half)
    if n == 1:
        return first
    if n == 2:
        return first + xk(_d(sq, 2), 2).scale(half) - xk(dsq, 2)
    if n == 3:
        return (
            first
            + xk(_d(sq, 2), 2).scale(Fraction(3, 2))
            - xk(dsq, 2).scale(3)
            + xk(_d(sq, 3), 3).scale(half)
            - xk(_d(dsq, 1), 3).scale(Fraction(3, 2))
        )
    raise ValueError("explicit expansions exist for n = 1, 2, 3 only")


def verify_operator_examples(fcoeffs: TruncatedSeries | Sequence, n: int) -> VerifyReport:
    f = fcoeffs if isinstance(fcoeffs, TruncatedSeries) else TruncatedSeries(fcoeffs)
    tf = f
    for _ in range(n):
        tf = theta(tf)
    info = {"n": str(n), "length": str(len(f))}
    return _compare("operator_example", info, _series_pairs(cauchy_product(f, tf), operator_examples(f, n)))


def verify_recurrence(params: ClausenParams, n_max: int) -> VerifyReport:
    """``P(n+1) = beta0(n) P(n) + beta1(n) P(n-1)`` for ``n = 1..n_max``."""
    info = {**params.as_dict(), "n_max": str(n_max)}

    def pairs():
        poly = char_poly(params)
        for n in range(1, n_max + 1):
            beta = recurrence_coeffs(params, n)
            yield n, poly(n + 1), beta.beta0 * poly(n) + beta.beta1 * poly(n - 1)

    return _guarded("recurrence", info, lambda: _compare("recurrence", info, pairs()))


def verify_linear_perturbation(params: ClausenParams, f, N: int) -> VerifyReport:
    """``2F1(a,b;c) 3F2(a,b,f+1;c,f) = F(2a,2b,a+b,2f+1; c,2a+2b+2m,2f | P_{2m})``."""
    f = as_rational(f)
    a, b, m, c = params.a, params.b, params.m, params.c
    info = {**params.as_dict(), "f": format_rational(f), "N": str(N)}

    def build():
        poly = char_poly(params)
        g = series_coeffs(params.gauss(), N)
        h = series_coeffs(SeriesSpec((a, b, f + 1), (c, f)), N)
        rhs = series_coeffs(SeriesSpec((2 * a, 2 * b, a + b, 2 * f + 1), (c, 2 * a + 2 * b + 2 * m, 2 * f)).perturbed(poly), N)
        return _compare("linear_perturbation", info, _series_pairs(cauchy_product(g, h), rhs))

    return _guarded("linear_perturbation", info, build)


def verify_contiguous_product(params: ClausenParams, N: int) -> VerifyReport:
    """``2F1(a,b;c) 2F1(a+1,b;c) = F(2a+1,2b,a+b; c,2a+2b+2m | P_{2m})``."""
    a, b, m, c = params.a, params.b, params.m, params.c
    info = {**params.as_dict(), "N": str(N)}

    def build():
        poly = char_poly(params)
        g = series_coeffs(params.gauss(), N)
        h = series_coeffs(SeriesSpec((a + 1, b), (c,)), N)
        rhs = series_coeffs(SeriesSpec((2 * a + 1, 2 * b, a + b), (c, 2 * a + 2 * b + 2 * m)).perturbed(poly), N)
        return _compare("contiguous_product", info, _series_pairs(cauchy_product(g, h), rhs))

    return _guarded("contiguous_product", info, build)


def verify_quadratic_perturbation(params: ClausenParams, f, N: int) -> VerifyReport:
    """``2F1(a,b;c) 3F2(a,b,f+2;c,f)`` against the 3F2 perturbed by the closed-form ``hat P_{2m+2}``."""
    f = as_rational(f)
    a, b, c = params.a, params.b, params.c
    info = {**params.as_dict(), "f": format_rational(f), "N": str(N)}

    def build():
        hat = quadratic_hat_poly(params, f)
        g = series_coeffs(params.gauss(), N)
        h = series_coeffs(SeriesSpec((a, b, f + 2), (c, f)), N)
        rhs = series_coeffs(params.product_spec().perturbed(hat), N)
        return _compare("quadratic_perturbation", info, _series_pairs(cauchy_product(g, h), rhs), polynomial=hat)

    return _guarded("quadratic_perturbation", info, build)
