"""Exact rational scalars and combinatorial primitives.

Every scalar in the library is a :class:`fractions.Fraction`; nothing is ever
rounded.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

Rational = Fraction

_LITERAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse a literal of the form ``p`` or ``p/q`` (optional leading minus).

    Decimal points, exponents and signs on the denominator are rejected.
    """
    match = _LITERAL.match(text)
    if match is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or 'p/q' string")
    return Fraction(x)


def rising_factorial(x, k: int) -> Fraction:
    """Pochhammer symbol ``(x)_k = x (x+1) ... (x+k-1)``; ``(x)_0 = 1``."""
    if k < 0:
        raise ValueError("rising_factorial needs k >= 0")
    x = Fraction(x)
    result = Fraction(1)
    for i in range(k):
        result *= x + i
        if not result:
            break
    return result


def pochhammer_product(params, k: int) -> Fraction:
    """Product of ``(p)_k`` over a parameter tuple."""
    result = Fraction(1)
    for p in params:
        result *= rising_factorial(p, k)
    return result


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k`` falls outside ``0..n``."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via the explicit alternating sum.

    ``S(n, k) = (1/k!) sum_i (-1)^(k-i) C(k, i) i^n``.
    """
    if k > n:
        return 0
    total = sum((-1) ** (k - i) * comb(k, i) * i**n for i in range(k + 1))
    q, r = divmod(total, factorial(k))
    assert r == 0
    return q


def chebyshev_weight(k: int, j: int) -> Fraction:
    """The weight ``k/(k-j) * C(k-j, j)`` shared by the orthogonality lemma
    and the perturbed characteristic polynomial (``k >= 1``, ``0 <= j <= k/2``).
    """
    return Fraction(k, k - j) * comb(k - j, j)


def orthogonality_H(ell: int, k: int) -> Fraction:
    """Raw value of ``sum_j (-1)^j k/(k-j) C(k-j, j) C(k-2j, ell-j)``.

    Returned unsimplified so callers can compare it with ``[ell in {0, k}]``.
    """
    if k < 1 or not 0 <= ell <= k:
        raise ValueError("orthogonality_H needs k >= 1 and 0 <= ell <= k")
    return sum(
        ((-1) ** j * chebyshev_weight(k, j) * binomial(k - 2 * j, ell - j) for j in range(k // 2 + 1)),
        Fraction(0),
    )


def is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0
