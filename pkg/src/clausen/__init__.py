"""Exact verification of extended Clausen product formulas for Gauss hypergeometric squares."""

from clausen.charpoly import (
    ClausenParams,
    DegenerateParams,
    char_poly,
    char_poly_via_interpolation,
    hat_poly_direct,
    hat_poly_interp,
    recurrence_coeffs,
)
from clausen.exact import binomial, orthogonality_H, parse_rational, rising_factorial, stirling2
from clausen.poly import RatPoly, interpolate, shift
from clausen.series import (
    DegenerateParameter,
    NonTerminating,
    PerturbedSpec,
    SeriesSpec,
    TruncatedSeries,
    cauchy_product,
    series_coeffs,
    terminating_sum_unity,
)
from clausen.verify import Status, VerifyReport

__all__ = [
    "ClausenParams",
    "DegenerateParameter",
    "DegenerateParams",
    "NonTerminating",
    "PerturbedSpec",
    "RatPoly",
    "SeriesSpec",
    "Status",
    "TruncatedSeries",
    "VerifyReport",
    "binomial",
    "cauchy_product",
    "char_poly",
    "char_poly_via_interpolation",
    "hat_poly_direct",
    "hat_poly_interp",
    "interpolate",
    "orthogonality_H",
    "parse_rational",
    "recurrence_coeffs",
    "rising_factorial",
    "series_coeffs",
    "shift",
    "stirling2",
    "terminating_sum_unity",
]
