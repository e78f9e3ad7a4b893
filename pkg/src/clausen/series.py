"""Truncated coefficient engine for (perturbed) generalized hypergeometric series.

A perturbed series ``F(top; bottom | P | x)`` has coefficients
``(top)_k / ((bottom)_k k!) * P(k)``.  Everything here works on finite
coefficient windows ``c_0 .. c_N`` with exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from clausen.exact import as_rational, format_rational, is_nonpositive_integer
from clausen.poly import RatPoly


class DegenerateParameter(ValueError):
    """A bottom parameter makes a denominator vanish inside the window."""


class NonTerminating(ValueError):
    """A unit-argument sum was requested for a series that does not terminate."""


def _params(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class SeriesSpec:
    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top", _params(self.top))
        object.__setattr__(self, "bottom", _params(self.bottom))

    def perturbed(self, poly: RatPoly | None = None) -> PerturbedSpec:
        return PerturbedSpec(self, poly if poly is not None else RatPoly.constant(1))

    def shifted(self, n: int) -> SeriesSpec:
        return SeriesSpec(tuple(a + n for a in self.top), tuple(b + n for b in self.bottom))

    def __str__(self):
        top = ", ".join(format_rational(a) for a in self.top)
        bottom = ", ".join(format_rational(b) for b in self.bottom)
        return f"{len(self.top)}F{len(self.bottom)}({top}; {bottom})"


@dataclass(frozen=True)
class PerturbedSpec:
    spec: SeriesSpec
    perturb: RatPoly = field(default_factory=lambda: RatPoly.constant(1))

    @property
    def top(self):
        return self.spec.top

    @property
    def bottom(self):
        return self.spec.bottom


def _as_perturbed(spec: SeriesSpec | PerturbedSpec) -> PerturbedSpec:
    return spec if isinstance(spec, PerturbedSpec) else spec.perturbed()


class TruncatedSeries:
    """Fixed-length coefficient window of a formal power series.

    Binary operations between windows of different lengths truncate to the
    shorter one.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(as_rational(c) for c in coeffs)

    @classmethod
    def zeros(cls, length: int) -> TruncatedSeries:
        return cls([0] * length)

    @classmethod
    def one(cls, length: int) -> TruncatedSeries:
        return cls([1] + [0] * (length - 1))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}])"

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def scale(self, c) -> TruncatedSeries:
        c = as_rational(c)
        return TruncatedSeries(c * a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return cauchy_product(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def truncate(self, length: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[:length])

    def times_x_power(self, k: int) -> TruncatedSeries:
        """Multiply by ``x**k`` keeping the window length."""
        if k == 0:
            return self
        n = len(self.coeffs)
        return TruncatedSeries([0] * min(k, n) + list(self.coeffs[: max(n - k, 0)]))


def hyper_term(top: Sequence[Fraction], bottom: Sequence[Fraction], k: int) -> Fraction:
    """Direct ``(top)_k / ((bottom)_k k!)`` as a product of factors.

    Raises DegenerateParameter on a vanishing denominator.
    """
    num = Fraction(1)
    den = Fraction(1)
    for i in range(k):
        for a in top:
            num *= a + i
        for b in bottom:
            d = b + i
            if not d:
                raise DegenerateParameter(f"bottom parameter {format_rational(b)} vanishes at index {i}")
            den *= d
        den *= i + 1
    return num / den


def _check_bottom(bottom: Sequence[Fraction], count: int) -> None:
    # (b)_k for k <= count involves b, b+1, ..., b+count-1
    for b in bottom:
        if is_nonpositive_integer(b) and -b <= count - 1:
            raise DegenerateParameter(
                f"bottom parameter {format_rational(b)} makes (b)_k vanish for k >= {1 - b}"
            )


def series_coeffs(spec: SeriesSpec | PerturbedSpec, N: int) -> TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of ``F(top; bottom | P | x)``.

    The hypergeometric part is generated incrementally from the term ratio
    ``prod(a + k) / (prod(b + k) (k + 1))``; the perturbation multiplies
    afterwards.
    """
    pspec = _as_perturbed(spec)
    top, bottom = pspec.top, pspec.bottom
    _check_bottom(bottom, N)
    out = []
    term = Fraction(1)
    for k in range(N + 1):
        out.append(term * pspec.perturb(k) if term else term)
        if k == N:
            break
        if term:
            num = Fraction(1)
            for a in top:
                num *= a + k
            den = Fraction(k + 1)
            for b in bottom:
                den *= b + k
            term = term * num / den
    return TruncatedSeries(out)


def cauchy_product(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(len(f), len(g))
    fc, gc = f.coeffs, g.coeffs
    return TruncatedSeries(sum((fc[i] * gc[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n))


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """``d/dx``; the window shrinks by one."""
    if len(f) < 1:
        raise ValueError("derivative needs a non-empty series")
    return TruncatedSeries((k + 1) * f[k + 1] for k in range(len(f) - 1))


def theta(f: TruncatedSeries) -> TruncatedSeries:
    """The Euler operator ``x d/dx``: ``c_k -> k c_k``."""
    return TruncatedSeries(k * c for k, c in enumerate(f.coeffs))


def termination_index(top: Sequence[Fraction]) -> int | None:
    """Smallest ``k`` with some top parameter equal to ``-k``, if any."""
    ks = [int(-a) for a in top if is_nonpositive_integer(a)]
    return min(ks) if ks else None


def terminating_sum_unity(spec: SeriesSpec | PerturbedSpec) -> Fraction:
    """Exact value at ``x = 1`` of a terminating perturbed series.

    Sums ``j = 0..k`` where ``-k`` is the top parameter closest to zero.
    Terms are built as direct products so no ratio ever divides by a zero
    numerator factor.
    """
    pspec = _as_perturbed(spec)
    k = termination_index(pspec.top)
    if k is None:
        raise NonTerminating(f"no top parameter of {pspec.spec} is a non-positive integer")
    _check_bottom(pspec.bottom, k)
    top = [(a.numerator, a.denominator) for a in pspec.top]
    bottom = [(b.numerator, b.denominator) for b in pspec.bottom]
    perturb = pspec.perturb
    constant = perturb.degree <= 0
    total = Fraction(0)
    # term j = num/den kept as integers; one Fraction per term
    num, den = 1, 1
    for j in range(k + 1):
        term = Fraction(num, den)
        total += term if constant else term * perturb(j)
        if j == k:
            break
        for p, q in top:
            num *= p + j * q
            den *= q
        for p, q in bottom:
            num *= q
            den *= p + j * q
        den *= j + 1
        if not num:
            break
    return total * perturb(0) if constant else total
