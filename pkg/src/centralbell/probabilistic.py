"""Probabilistic central factorial numbers ``T^Y(n, k)``, probabilistic
Stirling numbers, and the probabilistic Bell, central Bell and central
Fubini polynomials of a :class:`~centralbell.moments.MomentModel`."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .classical import Triangle, bell_phi, stirling2
from .exact import Poly, as_rational
from .moments import MomentModel, sum_power_moment


def prob_stirling2_Y(model: MomentModel, n: int, k: int, order: int | None = None) -> Fraction:
    """``{n brace k}_Y = (1/k!) sum_j C(k,j) (-1)^(k-j) E[S_j^n]``."""
    if n < 0 or k < 0:
        raise ValueError("negative index")
    if k > n:
        return Fraction(0)
    order = n if order is None else order
    total = Fraction(0)
    for j in range(k + 1):
        term = comb(k, j) * sum_power_moment(model, j, n, order)
        total += term if (k - j) % 2 == 0 else -term
    return total / factorial(k)


def prob_stirling2_triangle(model: MomentModel, order: int) -> Triangle:
    return Triangle([[prob_stirling2_Y(model, n, k, order) for k in range(n + 1)]
                     for n in range(order + 1)])


def prob_bell_phi_Y(model: MomentModel, n: int) -> Poly:
    """``phi_n^Y(x) = sum_k {n brace k}_Y x^k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly(prob_stirling2_Y(model, n, k) for k in range(n + 1))


def central_T_Y(model: MomentModel, n: int, k: int, order: int | None = None) -> Fraction:
    """Probabilistic central factorial number of the second kind.

    Explicit double sum over moments of partial sums::

        2^n T^Y(n,k) = (1/k!) sum_{j<=k} sum_{l<=n} C(n,l) C(k,j) (-1)^(n-l-j)
                       E[S_{k-j}^l] E[S_j^{n-l}]
    """
    if n < 0 or k < 0:
        raise ValueError("negative index")
    if k > n:
        return Fraction(0)
    order = n if order is None else order
    total = Fraction(0)
    for j in range(k + 1):
        ckj = comb(k, j)
        for l in range(n + 1):
            a = sum_power_moment(model, k - j, l, order)
            if a == 0:
                continue
            b = sum_power_moment(model, j, n - l, order)
            if b == 0:
                continue
            term = comb(n, l) * ckj * a * b
            total += term if (n - l - j) % 2 == 0 else -term
    return total / (factorial(k) * 2**n)


def central_T_Y_triangle(model: MomentModel, order: int) -> Triangle:
    return Triangle([[central_T_Y(model, n, k, order) for k in range(n + 1)]
                     for n in range(order + 1)])


def central_bell_Y(model: MomentModel, n: int) -> Poly:
    """``B_n^{(c,Y)}(x) = sum_k T^Y(n,k) x^k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly(central_T_Y(model, n, k) for k in range(n + 1))


def central_fubini_Y(model: MomentModel, n: int) -> Poly:
    """``F_n^{(c,Y)}(x) = sum_k k! T^Y(n,k) x^k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly(factorial(k) * central_T_Y(model, n, k) for k in range(n + 1))


def poisson_central_bell(alpha, n: int) -> Poly:
    """Central Bell polynomial of a Poisson(alpha) variable in closed form::

        2^n B_n(x) = sum_{l<=n} sum_{k<=l} sum_{j<=n-l} (-1)^l C(n,l)
                     {n-l brace j} {l brace k} alpha^(j+k) phi_j(x) phi_k(-x)

    The inner weight on ``phi_j(x)`` is a Stirling number ``{n-l brace j}``;
    a binomial ``C(n-l, j)`` there gives the wrong value already at n = 1.
    """
    alpha = as_rational(alpha)
    if n < 0:
        raise ValueError("n must be nonnegative")
    phi_pos = [bell_phi(j) for j in range(n + 1)]
    phi_neg = [p.compose_neg() for p in phi_pos]
    total = Poly()
    for l in range(n + 1):
        right = Poly()
        for k in range(l + 1):
            s = stirling2(l, k)
            if s:
                right = right + phi_neg[k] * (s * alpha**k)
        left = Poly()
        for j in range(n - l + 1):
            s = stirling2(n - l, j)
            if s:
                left = left + phi_pos[j] * (s * alpha**j)
        term = left * right * comb(n, l)
        total = total - term if l % 2 else total + term
    return total / 2**n


@dataclass(frozen=True)
class ProbCentralTable:
    """``T^Y`` triangle with the central Bell and Fubini polynomials built from it."""

    model: MomentModel
    order: int
    T_Y: Triangle
    bell_polys: tuple[Poly, ...]
    fubini_polys: tuple[Poly, ...]

    @classmethod
    def from_triangle(cls, model: MomentModel, T_Y: Triangle) -> ProbCentralTable:
        order = T_Y.max_order
        bell = tuple(Poly(T_Y.row(n)) for n in range(order + 1))
        fubini = tuple(Poly(factorial(k) * v for k, v in enumerate(T_Y.row(n)))
                       for n in range(order + 1))
        return cls(model, order, T_Y, bell, fubini)

    @classmethod
    def build(cls, model: MomentModel, order: int) -> ProbCentralTable:
        if order < 0:
            raise ValueError("order must be nonnegative")
        return cls.from_triangle(model, central_T_Y_triangle(model, order))

    def perturbed(self, n: int, k: int, delta=1) -> ProbCentralTable:
        """Copy with ``T^Y(n,k)`` shifted by ``delta`` (fault injection)."""
        if not 0 <= k <= n <= self.order:
            raise IndexError(f"({n}, {k}) outside table of order {self.order}")
        tri = self.T_Y.with_entry(n, k, self.T_Y[n, k] + as_rational(delta))
        return ProbCentralTable.from_triangle(self.model, tri)
