from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from centralbell.classical import (
    Triangle,
    bell_phi,
    central_bell_classical,
    central_factorial_poly,
    central_T,
    central_T_triangle,
    complete_bell,
    partial_bell,
    partial_bell_by_partitions,
    partial_bell_triangle,
    stirling2,
    stirling2_triangle,
)
from centralbell.exact import X, Poly, falling_factorial_poly
from centralbell.series import TruncatedSeries, series_exp, series_log, series_sqrt

F = Fraction


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def partial_bell_brute(n, k, args):
    """Sum over set partitions of {1..n} into k blocks of prod x_{|block|}."""
    total = 0
    for part in set_partitions(list(range(n))):
        if len(part) == k:
            term = 1
            for block in part:
                term = term * args[len(block) - 1]
            total = total + term
    return total


def connection_coefficients(target, basis):
    """Solve target = sum c_k basis[k] for a triangular monic basis."""
    coeffs = [F(0)] * len(basis)
    rest = target
    for k in range(len(basis) - 1, -1, -1):
        c = rest.coeff(k) / basis[k].coeff(k)
        coeffs[k] = c
        rest = rest - basis[k] * c
    assert rest == Poly()
    return coeffs


def test_stirling_examples():
    for n in range(8):
        assert stirling2(n, n) == 1
    for n in range(1, 8):
        assert stirling2(n, 0) == 0
    assert stirling2(4, 2) == 7
    assert stirling2(2, 5) == 0
    with pytest.raises(ValueError):
        stirling2(-1, 0)


@pytest.mark.parametrize("n", range(8))
def test_stirling_counts_set_partitions(n):
    for k in range(n + 1):
        assert stirling2(n, k) == partial_bell_brute(n, k, [1] * n) if n else 1


def test_central_factorial_poly_examples():
    assert central_factorial_poly(0) == Poly([1])
    assert central_factorial_poly(2) == X**2
    assert central_factorial_poly(3) == Poly([0, F(-1, 4), 0, 1])


@pytest.mark.parametrize("n", range(1, 10))
def test_central_factorial_binomial_form(n):
    # x * C(x + n/2 - 1, n - 1) * (n - 1)!, checked pointwise at n + 1 rationals
    for r in [F(i, 3) for i in range(-4, n - 3)]:
        top = r + F(n, 2) - 1
        binom = F(1)
        for i in range(n - 1):
            binom *= top - i
        assert central_factorial_poly(n)(r) == r * binom


def test_central_T_examples():
    assert central_T(3, 2) == 0
    assert central_T(3, 1) == F(1, 4)
    assert central_T(4, 2) == 1
    assert central_T(5, 3) == F(5, 2)


@pytest.mark.parametrize("n", range(13))
def test_central_T_solves_connection_problem(n):
    basis = [central_factorial_poly(k) for k in range(n + 1)]
    assert connection_coefficients(X**n, basis) == [central_T(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("n", range(13))
def test_stirling_solves_connection_problem(n):
    basis = [falling_factorial_poly(k) for k in range(n + 1)]
    assert connection_coefficients(X**n, basis) == [stirling2(n, k) for k in range(n + 1)]


def test_triangle_builders_agree_with_entries():
    tri = central_T_triangle(10)
    assert all(tri[n, k] == central_T(n, k) for n in range(11) for k in range(n + 1))
    st2 = stirling2_triangle(10)
    assert all(st2[n, k] == stirling2(n, k) for n in range(11) for k in range(n + 1))


def test_triangle_conventions():
    tri = central_T_triangle(4)
    assert tri[0, 0] == 1
    assert tri[2, 3] == 0 and tri[2, -1] == 0
    with pytest.raises(IndexError):
        tri[5, 1]
    with pytest.raises(ValueError):
        Triangle([[1], [1]])
    bumped = tri.with_entry(3, 1, 7)
    assert bumped[3, 1] == 7 and tri[3, 1] == F(1, 4)


@pytest.mark.parametrize("n", range(11))
def test_central_factorial_generating_function(n):
    order = 10
    inside = series_sqrt(TruncatedSeries([1, 0, F(1, 4)], order))
    base = TruncatedSeries([0, F(1, 2)], order) + inside
    gf = series_exp(series_log(base).promote().scale(2 * X))
    assert gf.egf()[n] == central_factorial_poly(n)


def test_bell_phi_examples():
    assert bell_phi(0) == Poly([1])
    assert bell_phi(3) == Poly([0, 1, 3, 1])
    assert bell_phi(3)(1) == 5
    assert [bell_phi(n)(1) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_partial_bell_examples():
    x1, x2 = Poly([0, 1]), Poly([0, 0, 1])  # stand-ins for independent symbols
    assert partial_bell(3, 2, [x1, x2]) == 3 * x1 * x2
    assert partial_bell(4, 2, [1, 1, 1]) == 7
    assert partial_bell(5, 5, [F(2, 3)]) == F(2, 3) ** 5
    assert partial_bell(0, 0, []) == 1
    assert partial_bell(3, 0, []) == 0
    with pytest.raises(ValueError):
        partial_bell(4, 2, [1, 1])


@pytest.mark.parametrize("n", range(9))
def test_partial_bell_routes_agree(n):
    args = [F(i * i + 1, i + 2) for i in range(1, n + 1)]
    tri = partial_bell_triangle(args, n)
    for k in range(n + 1):
        series_value = partial_bell(n, k, args)
        assert series_value == partial_bell_by_partitions(n, k, args)
        assert series_value == tri[n, k]
        if n <= 7:
            assert series_value == partial_bell_brute(n, k, args) if n else True


@pytest.mark.parametrize("n", range(11))
def test_partial_bell_of_ones_is_stirling(n):
    for k in range(n + 1):
        assert partial_bell(n, k, [1] * (n - k + 1)) == stirling2(n, k)


def test_complete_bell_examples():
    assert complete_bell(0, []) == 1
    assert complete_bell(3, [1, 1, 1]) == 5
    assert complete_bell(3, [X, X, X]) == Poly([0, 1, 3, 1])
    with pytest.raises(ValueError):
        complete_bell(3, [1, 1])


@settings(max_examples=20, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=7, max_size=7))
def test_complete_bell_generating_function(args):
    order = 7
    inner = TruncatedSeries([0] + [a / factorial(i) for i, a in enumerate(args, 1)], order)
    gf = series_exp(inner).egf()
    for n in range(order + 1):
        assert complete_bell(n, args) == gf[n]


def test_central_bell_classical_examples():
    assert central_bell_classical(0) == Poly([1])
    assert central_bell_classical(3) == Poly([0, F(1, 4), 0, 1])
    assert central_bell_classical(2) == X**2
