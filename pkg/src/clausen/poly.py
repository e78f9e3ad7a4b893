"""Dense univariate polynomials over the rationals in the indeterminate ``t``."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from clausen.exact import as_rational, format_rational


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class RatPoly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``t**i``.

    The zero polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([as_rational(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def constant(cls, c) -> RatPoly:
        return cls([c])

    @classmethod
    def t(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def linear(cls, slope, intercept) -> RatPoly:
        """``slope * t + intercept``."""
        return cls([intercept, slope])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    # ring structure

    @staticmethod
    def _coerce(other) -> RatPoly:
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = as_rational(scalar)
        return RatPoly(c / scalar for c in self.coeffs)

    def __pow__(self, n: int) -> RatPoly:
        result = RatPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x) -> Fraction:
        """Horner evaluation at a rational point."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"RatPoly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = format_rational(c)
                if mono and "/" in cs:
                    cs = f"({cs})"
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def shift(self, h) -> RatPoly:
        return shift(self, h)

    def compose_linear(self, slope, intercept) -> RatPoly:
        """``t -> P(slope * t + intercept)``."""
        inner = RatPoly.linear(slope, intercept)
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc


def poly_arith(lhs: RatPoly, rhs: RatPoly, op: str) -> RatPoly:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown polynomial operation {op!r}")


def shift(p: RatPoly, h) -> RatPoly:
    """The shift operator: returns ``t -> P(t + h)``.

    Uses the binomial (Taylor) expansion, which keeps the result exact and
    of the same degree.
    """
    h = as_rational(h)
    if not h:
        return p
    n = len(p.coeffs)
    out = [Fraction(0)] * n
    powers = [Fraction(1)]
    for _ in range(n):
        powers.append(powers[-1] * h)
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        for j in range(i + 1):
            out[j] += c * comb(i, j) * powers[i - j]
    return RatPoly(out)


def rising_poly(base: RatPoly, k: int) -> RatPoly:
    """``(base)_k = base (base + 1) ... (base + k - 1)`` as a polynomial."""
    result = RatPoly.constant(1)
    for i in range(k):
        result = result * (base + i)
    return result


def falling_factorial(k: int) -> RatPoly:
    """``[t]_k = t (t - 1) ... (t - k + 1)``."""
    result = RatPoly.constant(1)
    for i in range(k):
        result = result * RatPoly.linear(1, -i)
    return result


def interpolate(values: Sequence) -> RatPoly:
    """Polynomial of degree ``<= n`` through ``(j, values[j])``, ``j = 0..n``.

    Newton forward-difference form
    ``P(t) = sum_k (-t)_k / k! * sum_j (-1)^j C(k, j) values[j]``,
    evaluated as ``sum_k C(t, k) * Delta^k values[0]`` (the same sum, with
    the sign of ``(-t)_k`` folded into the difference).
    """
    if not values:
        raise ValueError("interpolate needs at least one value")
    diffs = [as_rational(v) for v in values]
    # forward differences in place: after pass k, diffs[k] = Delta^k values[0]
    n = len(diffs)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            diffs[i] = diffs[i] - diffs[i - 1]
    result = RatPoly()
    binom_t = RatPoly.constant(1)  # C(t, k) = [t]_k / k!
    for k, d in enumerate(diffs):
        if d:
            result = result + binom_t * d
        binom_t = binom_t * RatPoly.linear(Fraction(1, k + 1), Fraction(-k, k + 1))
    return result
