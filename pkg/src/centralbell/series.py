"""Truncated power series over the rationals or over ``Poly``.

A series of order ``N`` stores the plain coefficients ``c_0 .. c_N`` of
``sum(c_i t**i)``.  Exponential-generating-function coefficients are
obtained with :func:`egf_coeff`, which applies the ``n!`` scaling.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from .exact import Poly

RATIONAL = "rational"
POLY = "poly"

Coeff = Union[Fraction, Poly]


class SeriesError(ValueError):
    """Order mismatch, ring mismatch or an illegal constant term."""


def _zero(ring: str) -> Coeff:
    return Poly() if ring == POLY else Fraction(0)


def _one(ring: str) -> Coeff:
    return Poly((1,)) if ring == POLY else Fraction(1)


def _coerce(value, ring: str) -> Coeff:
    if ring == POLY:
        if isinstance(value, Poly):
            return value
        return Poly((Fraction(value),))
    if isinstance(value, Poly):
        raise SeriesError("polynomial coefficient in a rational series; promote first")
    return Fraction(value)


class TruncatedSeries:
    __slots__ = ("order", "ring", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None, ring: str | None = None):
        coeffs = list(coeffs)
        if ring is None:
            ring = POLY if any(isinstance(c, Poly) for c in coeffs) else RATIONAL
        if ring not in (RATIONAL, POLY):
            raise SeriesError(f"unknown ring {ring!r}")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("order must be nonnegative")
        if len(coeffs) > order + 1:
            raise SeriesError(f"{len(coeffs)} coefficients do not fit order {order}")
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.ring = ring
        self.coeffs = tuple(_coerce(c, ring) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs: tuple, order: int, ring: str) -> TruncatedSeries:
        s = object.__new__(cls)
        s.order, s.ring, s.coeffs = order, ring, coeffs
        return s

    @classmethod
    def one(cls, order: int, ring: str = RATIONAL) -> TruncatedSeries:
        return cls([_one(ring)], order, ring)

    @classmethod
    def zero(cls, order: int, ring: str = RATIONAL) -> TruncatedSeries:
        return cls([], order, ring)

    @classmethod
    def from_egf(cls, egf: Sequence, order: int | None = None, ring: str | None = None) -> TruncatedSeries:
        """Build ``sum(a_n t**n / n!)`` from EGF coefficients ``a_n``."""
        coeffs = [a / factorial(n) if isinstance(a, Poly) else Fraction(a, 1) / factorial(n)
                  for n, a in enumerate(egf)]
        return cls(coeffs, order, ring)

    def __getitem__(self, i: int) -> Coeff:
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, ring={self.ring})"

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if self.order != other.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")
        if self.ring != other.ring:
            raise SeriesError(f"ring mismatch: {self.ring} vs {other.ring}; promote explicitly")

    def promote(self) -> TruncatedSeries:
        """Embed a rational series into the polynomial ring as constants."""
        if self.ring == POLY:
            return self
        return TruncatedSeries._raw(tuple(Poly((c,)) for c in self.coeffs), self.order, POLY)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries._raw(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                                    self.order, self.ring)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries._raw(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
                                    self.order, self.ring)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries._raw(tuple(-a for a in self.coeffs), self.order, self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    def scale(self, c) -> TruncatedSeries:
        """Multiply every coefficient by a ring element or rational."""
        if isinstance(c, Poly) and self.ring != POLY:
            raise SeriesError("scaling a rational series by a polynomial; promote first")
        return TruncatedSeries._raw(tuple(a * c for a in self.coeffs), self.order, self.ring)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int) -> TruncatedSeries:
        return series_pow(self, k)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError("cannot raise the order of a truncated series")
        return TruncatedSeries._raw(self.coeffs[: order + 1], order, self.ring)

    def egf(self) -> list:
        return [egf_coeff(self, n) for n in range(self.order + 1)]


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    f._check(g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(f.order + 1):
        acc = _zero(f.ring)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            bj = b[n - i]
            if bj == 0:
                continue
            acc = acc + ai * bj
        out.append(acc)
    return TruncatedSeries._raw(tuple(out), f.order, f.ring)


def series_pow(f: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise SeriesError("negative power; use series_reciprocal")
    result = TruncatedSeries.one(f.order, f.ring)
    base = f
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) for ``f_0 = 0`` via ``n g_n = sum_{j=1..n} j f_j g_{n-j}``."""
    if f.coeffs[0] != 0:
        raise SeriesError("series_exp needs a zero constant term")
    a = f.coeffs
    g = [_one(f.ring)]
    for n in range(1, f.order + 1):
        acc = _zero(f.ring)
        for j in range(1, n + 1):
            if a[j] != 0:
                acc = acc + a[j] * g[n - j] * j
        g.append(acc / n)
    return TruncatedSeries._raw(tuple(g), f.order, f.ring)


def _require_unit(f: TruncatedSeries, what: str) -> None:
    if f.coeffs[0] != 1:
        raise SeriesError(f"{what} needs constant term 1, got {f.coeffs[0]}")


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """log(f) for ``f_0 = 1``; from ``f g' = f'``."""
    _require_unit(f, "series_log")
    a = f.coeffs
    g = [_zero(f.ring)]
    for n in range(1, f.order + 1):
        acc = a[n] * n
        for j in range(1, n):
            if a[n - j] != 0:
                acc = acc - g[j] * a[n - j] * j
        g.append(acc / n)
    return TruncatedSeries._raw(tuple(g), f.order, f.ring)


def series_sqrt(f: TruncatedSeries) -> TruncatedSeries:
    """Square root with ``g_0 = 1``; ``2 g_n = f_n - sum_{j=1..n-1} g_j g_{n-j}``."""
    _require_unit(f, "series_sqrt")
    a = f.coeffs
    g = [_one(f.ring)]
    for n in range(1, f.order + 1):
        acc = a[n]
        for j in range(1, n):
            acc = acc - g[j] * g[n - j]
        g.append(acc / 2)
    return TruncatedSeries._raw(tuple(g), f.order, f.ring)


def series_reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    _require_unit(f, "series_reciprocal")
    a = f.coeffs
    g = [_one(f.ring)]
    for n in range(1, f.order + 1):
        acc = _zero(f.ring)
        for j in range(1, n + 1):
            if a[j] != 0:
                acc = acc - a[j] * g[n - j]
        g.append(acc)
    return TruncatedSeries._raw(tuple(g), f.order, f.ring)


def egf_coeff(f: TruncatedSeries, n: int) -> Coeff:
    """``n! * c_n``: the coefficient of ``t**n / n!``."""
    if n < 0 or n > f.order:
        raise SeriesError(f"index {n} outside series of order {f.order}")
    return f.coeffs[n] * factorial(n)


def egf_power_rows(base: TruncatedSeries) -> list[list]:
    """``rows[n][k] = n! [t^n] base^k / k!`` for ``0 <= k <= n <= order``."""
    order = base.order
    zero = _zero(base.ring)
    rows = [[zero] * (n + 1) for n in range(order + 1)]
    power = TruncatedSeries.one(order, base.ring)
    for k in range(order + 1):
        if k:
            power = series_mul(power, base)
        for n in range(k, order + 1):
            rows[n][k] = egf_coeff(power, n) / factorial(k)
    return rows


def exp_linear(scale, order: int) -> TruncatedSeries:
    """``e^{scale * t}`` written out termwise (rational scale)."""
    scale = Fraction(scale)
    return TruncatedSeries([scale**i / factorial(i) for i in range(order + 1)], order, RATIONAL)
