"""Alternative evaluators for the probabilistic and classical objects.

Each function here reaches its result by a route different from the
canonical one in :mod:`centralbell.probabilistic` / :mod:`centralbell.classical`,
so that agreement between the two is a meaningful check.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..classical import partial_bell, partial_bell_triangle
from ..exact import X, Poly
from ..moments import MomentModel, mgf_series, moment, sum_power_moment
from ..series import (
    RATIONAL,
    TruncatedSeries,
    egf_power_rows,
    exp_linear,
    series_exp,
    series_log,
    series_reciprocal,
    series_sqrt,
)


def odd_mgf_difference(model: MomentModel, order: int) -> TruncatedSeries:
    """``E[e^{Yt/2}] - E[e^{-Yt/2}]`` from two scaled moment series."""
    return mgf_series(model, Fraction(1, 2), order) - mgf_series(model, Fraction(-1, 2), order)


def central_T_Y_by_series(model: MomentModel, order: int) -> list[list[Fraction]]:
    """``T^Y(n,k)`` as EGF coefficients of ``D^k / k!``, ``D`` the odd difference."""
    base = odd_mgf_difference(model, order)
    return egf_power_rows(base)


def central_T_Y_args(model: MomentModel, count: int) -> list[Fraction]:
    """Partial Bell arguments ``(1 - (-1)^m) E[Y^m] / 2^m`` for ``m = 1..count``."""
    return [Fraction(1 - (-1) ** m, 2**m) * moment(model, m) for m in range(1, count + 1)]


def central_T_Y_by_partial_bell(model: MomentModel, n: int, k: int) -> Fraction:
    return partial_bell(n, k, central_T_Y_args(model, max(n - k + 1, 0)))


def even_index_args(model: MomentModel, count: int) -> list[Fraction]:
    """``E[Y], 0, (1/2)^2 E[Y^3], 0, ...``: odd ``m`` carry ``(1/2)^(m-1) E[Y^m]``."""
    return [Fraction(1, 2 ** (m - 1)) * moment(model, m) if m % 2 else Fraction(0)
            for m in range(1, count + 1)]


def central_bell_Y_by_gf(model: MomentModel, order: int) -> list[Poly]:
    """EGF coefficients of ``exp(x D)`` over polynomial coefficients."""
    d = odd_mgf_difference(model, order).promote().scale(X)
    return series_exp(d).egf()


def central_fubini_Y_by_gf(model: MomentModel, order: int) -> list[Poly]:
    """EGF coefficients of ``1 / (1 - x D)``."""
    d = odd_mgf_difference(model, order).promote().scale(X)
    return series_reciprocal(TruncatedSeries.one(order, d.ring) - d).egf()


def central_bell_Y_by_partial_bell(model: MomentModel, order: int) -> list[Poly]:
    """``sum_k B_{n,k}(x (1-(-1)^m) E[Y^m] / 2^m)`` over polynomial arguments."""
    args = [X * a for a in central_T_Y_args(model, order)]
    tri = partial_bell_triangle(args, order)
    return [sum((tri[n, k] for k in range(n + 1)), Poly()) for n in range(order + 1)]


def central_bell_Y_double_sum_coeff(model: MomentModel, n: int, power: int,
                                    order: int | None = None) -> Fraction:
    """Coefficient of ``x^power`` in the doubly infinite ``(l, j)`` expansion.

    Only pairs with ``l + j = power`` contribute, so each coefficient is a
    finite sum; for ``power > n`` it must vanish.
    """
    order = max(n, 0) if order is None else order
    total = Fraction(0)
    for l in range(power + 1):
        j = power - l
        inner = Fraction(0)
        for m in range(n + 1):
            a = sum_power_moment(model, l, m, order)
            if a == 0:
                continue
            b = sum_power_moment(model, j, n - m, order)
            term = comb(n, m) * a * b
            inner += term if (n - m) % 2 == 0 else -term
        inner /= factorial(l) * factorial(j)
        total += -inner if j % 2 else inner
    return total / 2**n


def central_bell_Y_stirling_triple(pstir, n: int) -> Poly:
    """Triple sum over products of probabilistic Stirling numbers.

    ``pstir`` is a triangle of ``{n brace k}_Y``.
    """
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        cnk = comb(n, k)
        for j in range(k + 1):
            skj = pstir[k, j]
            if skj == 0:
                continue
            for l in range(n - k + 1):
                term = cnk * pstir[n - k, l] * skj
                coeffs[j + l] += -term if (j + k) % 2 else term
    return Poly(coeffs) / 2**n


def central_fubini_Y_stirling_triple(pstir, n: int) -> Poly:
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        for j in range(k + 1):
            for i in range(k - j, n - j + 1):
                term = factorial(k) * pstir[i, k - j] * pstir[n - i, j] * comb(n, i)
                coeffs[k] += -term if (n - i - j) % 2 else term
    return Poly(coeffs) / 2**n


def central_bell_classical_coeff(n: int, power: int) -> Fraction:
    """``x^power`` coefficient of the classical ``(l, j)`` expansion."""
    total = Fraction(0)
    for l in range(power + 1):
        j = power - l
        term = comb(power, l) * Fraction(l - j, 2) ** n
        total += -term if j % 2 else term
    return total / factorial(power)


def central_factorial_by_gf(order: int) -> list[Poly]:
    """EGF coefficients of ``(t/2 + sqrt(1 + t^2/4))^(2x) = exp(2x log(...))``."""
    inside = TruncatedSeries([1, 0, Fraction(1, 4)][: order + 1], order, RATIONAL)
    half_t = TruncatedSeries([0, Fraction(1, 2)][: order + 1], order, RATIONAL)
    log_part = series_log(half_t + series_sqrt(inside))
    return series_exp(log_part.promote().scale(2 * X)).egf()


def central_T_by_gf(order: int) -> list[list[Fraction]]:
    """``T(n,k)`` from ``(e^{t/2} - e^{-t/2})^k / k!`` with both exponentials
    built by the series exponential."""
    half = TruncatedSeries([0, Fraction(1, 2)][: order + 1], order, RATIONAL)
    base = series_exp(half) - series_exp(-half)
    return egf_power_rows(base)


def prob_stirling2_by_gf(model: MomentModel, order: int) -> list[list[Fraction]]:
    """``{n brace k}_Y`` from ``(E[e^{tY}] - 1)^k / k!``."""
    base = mgf_series(model, 1, order) - TruncatedSeries.one(order)
    return egf_power_rows(base)


def prob_bell_by_gf(model: MomentModel, order: int) -> list[Poly]:
    """EGF coefficients of ``exp(x (E[e^{tY}] - 1))``."""
    base = (mgf_series(model, 1, order) - TruncatedSeries.one(order)).promote().scale(X)
    return series_exp(base).egf()


def poisson_mgf_by_composition(alpha, scale, order: int) -> TruncatedSeries:
    """``exp(alpha (e^{scale t} - 1))`` assembled from series operations."""
    inner = exp_linear(scale, order) - TruncatedSeries.one(order)
    return series_exp(inner.scale(Fraction(alpha)))
