"""Deterministic background objects: Stirling numbers, central factorials,
central factorial numbers T(n, k), Bell / partial Bell / complete Bell
polynomials and the classical central Bell polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .exact import Poly
from .series import POLY, RATIONAL, TruncatedSeries, egf_coeff, egf_power_rows


class Triangle:
    """Lower-triangular table ``v(n, k)``, ``0 <= k <= n <= max_order``.

    Lookups outside the triangle return zero.
    """

    __slots__ = ("max_order", "_rows", "_zero")

    def __init__(self, rows: Sequence[Sequence], zero=Fraction(0)):
        rows = tuple(tuple(r) for r in rows)
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValueError(f"row {n} has {len(r)} entries, expected {n + 1}")
        self._rows = rows
        self.max_order = len(rows) - 1
        self._zero = zero

    def __getitem__(self, nk: tuple[int, int]):
        n, k = nk
        if 0 <= k <= n <= self.max_order:
            return self._rows[n][k]
        if n > self.max_order and 0 <= k <= n:
            raise IndexError(f"row {n} beyond triangle order {self.max_order}")
        return self._zero

    def row(self, n: int) -> tuple:
        return self._rows[n]

    def rows(self) -> Iterator[tuple]:
        return iter(self._rows)

    def with_entry(self, n: int, k: int, value) -> Triangle:
        rows = [list(r) for r in self._rows]
        rows[n][k] = value
        return Triangle(rows, self._zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self) -> str:
        return f"Triangle(max_order={self.max_order})"


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"negative index ({n}, {k})")


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1) + (0,)
    return tuple((k * prev[k] if k <= n - 1 else 0) + (prev[k - 1] if k else 0)
                 for k in range(n + 1))


def stirling2(n: int, k: int) -> Fraction:
    """Stirling number of the second kind; zero for ``k > n``."""
    _check_nk(n, k)
    if k > n:
        return Fraction(0)
    for m in range(n + 1):  # fill the cache bottom-up, no deep recursion
        _stirling2_row(m)
    return Fraction(_stirling2_row(n)[k])


def stirling2_triangle(order: int) -> Triangle:
    return Triangle([[stirling2(n, k) for k in range(n + 1)] for n in range(order + 1)])


def central_factorial_poly(n: int) -> Poly:
    """``x^{[n]} = x (x + n/2 - 1)(x + n/2 - 2) ... (x + n/2 - n + 1)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Poly((1,))
    p = Poly((0, 1))
    half = Fraction(n, 2)
    for i in range(1, n):
        p = p * Poly((half - i, 1))
    return p


def sinh_half_series(order: int) -> TruncatedSeries:
    """``e^{t/2} - e^{-t/2}``: only odd powers, coefficient ``2 (1/2)^m / m!``."""
    return TruncatedSeries(
        [Fraction(2, 2**m * factorial(m)) if m % 2 else 0 for m in range(order + 1)],
        order, RATIONAL,
    )


def central_T(n: int, k: int) -> Fraction:
    """Central factorial number of the second kind T(n, k)."""
    _check_nk(n, k)
    if k > n or (n - k) % 2:
        return Fraction(0)
    base = sinh_half_series(n)
    return egf_coeff(base**k, n) / factorial(k)


def central_T_triangle(order: int) -> Triangle:
    return Triangle(egf_power_rows(sinh_half_series(order)))


def bell_phi(n: int) -> Poly:
    """Bell (Touchard) polynomial ``sum_k {n brace k} x^k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly(stirling2(n, k) for k in range(n + 1))


def _ring_of(args: Sequence) -> str:
    return POLY if any(isinstance(a, Poly) for a in args) else RATIONAL


def _exact_args(args: Sequence) -> list:
    return [a if isinstance(a, Poly) else Fraction(a) for a in args]


def partial_bell(n: int, k: int, args: Sequence):
    """Partial Bell polynomial ``B_{n,k}(x_1, ..., x_{n-k+1})``.

    Computed as ``n! [t^n] (sum_m x_m t^m / m!)^k / k!``.  ``args`` may hold
    rationals or ``Poly`` values; the result lives in the same ring.
    """
    _check_nk(n, k)
    args = _exact_args(args)
    ring = _ring_of(args)
    zero = Poly() if ring == POLY else Fraction(0)
    if k > n:
        return zero
    if k == 0:
        return zero + 1 if n == 0 else zero
    need = n - k + 1
    if len(args) < need:
        raise ValueError(f"B_{{{n},{k}}} needs {need} arguments, got {len(args)}")
    inner = TruncatedSeries(
        [0] + [args[m - 1] / factorial(m) for m in range(1, need + 1)], n, ring
    )
    return egf_coeff(inner**k, n) / factorial(k)


def partial_bell_triangle(args: Sequence, order: int) -> Triangle:
    """All ``B_{n,k}(args)`` for ``n <= order`` from one argument sequence."""
    args = _exact_args(args)
    ring = _ring_of(args)
    zero = Poly() if ring == POLY else Fraction(0)
    if order >= 1 and len(args) < order:
        raise ValueError(f"order {order} needs {order} arguments, got {len(args)}")
    inner = TruncatedSeries(
        [0] + [args[m - 1] / factorial(m) for m in range(1, order + 1)], order, ring
    )
    return Triangle(egf_power_rows(inner), zero)


def _multiplicities(n: int, k: int, top: int) -> Iterator[list[int]]:
    """Vectors ``l_1..l_top`` with ``sum l_i = k`` and ``sum i l_i = n``."""

    def rec(i: int, left_n: int, left_k: int):
        if i == 0:
            if left_n == 0 and left_k == 0:
                yield []
            return
        for li in range(min(left_k, left_n // i) + 1):
            for rest in rec(i - 1, left_n - i * li, left_k - li):
                yield rest + [li]

    yield from rec(top, n, k)


def partial_bell_by_partitions(n: int, k: int, args: Sequence):
    """Multi-index sum over block-size multiplicities; factorial cost, small n only."""
    _check_nk(n, k)
    args = _exact_args(args)
    ring = _ring_of(args)
    total = Poly() if ring == POLY else Fraction(0)
    if k > n:
        return total
    top = n - k + 1
    for ls in _multiplicities(n, k, top):
        weight = Fraction(factorial(n))
        for li in ls:
            weight /= factorial(li)
        term = Poly((weight,)) if ring == POLY else weight
        for i, li in enumerate(ls, start=1):
            if li:
                term = term * (args[i - 1] / factorial(i)) ** li
        total = total + term
    return total


def complete_bell(n: int, args: Sequence):
    """``B_n(x_1..x_n) = sum_k B_{n,k}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(args) < n:
        raise ValueError(f"B_{n} needs {n} arguments, got {len(args)}")
    total = partial_bell(n, 0, args)
    for k in range(1, n + 1):
        total = total + partial_bell(n, k, args)
    return total


def central_bell_classical(n: int) -> Poly:
    """``B_n^{(c)}(x) = sum_k T(n, k) x^k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly(central_T(n, k) for k in range(n + 1))
