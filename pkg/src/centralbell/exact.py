"""Exact rationals and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  :class:`Poly` is an immutable dense polynomial in
one indeterminate ``x`` whose coefficients are Fractions.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

ExactRational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction; anything inexact is refused."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Immutable polynomial ``sum(coeffs[i] * x**i)`` over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def const(cls, value: Scalar) -> Poly:
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> Poly:
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    # arithmetic

    @staticmethod
    def _lift(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-a for a in self._c)

    def __pos__(self) -> Poly:
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return Poly()
            return Poly(a * other for a in self._c)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly(a / other for a in self._c)
        return NotImplemented

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, r: Scalar) -> Fraction:
        return poly_eval(self, r)

    def compose_neg(self) -> Poly:
        """Return p(-x)."""
        return Poly(a if i % 2 == 0 else -a for i, a in enumerate(self._c))

    # comparison

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        if len(self._c) <= 1:
            return hash(self.coeff(0))
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly({[format_rational(a) for a in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and a == 1:
                terms.append(mono)
            elif mono and a == -1:
                terms.append("-" + mono)
            else:
                terms.append(format_rational(a) + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


X = Poly((0, 1))


def falling_factorial_poly(k: int) -> Poly:
    """``(x)_k = x (x-1) ... (x-k+1)``; ``(x)_0 = 1``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = Poly((1,))
    for i in range(k):
        p = p * Poly((-i, 1))
    return p


def poly_derive(p: Poly, k: int = 1) -> Poly:
    if k < 0:
        raise ValueError("k must be nonnegative")
    c = p.coeffs
    if k >= len(c):
        return Poly()
    # i!/(i-k)! falling-factorial weight on x^i
    return Poly(c[i] * (factorial(i) // factorial(i - k)) for i in range(k, len(c)))


def poly_eval(p: Poly, r: Scalar) -> Fraction:
    r = Fraction(r)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * r + a
    return acc


def poly_to_strings(p: Poly) -> list[str]:
    """Coefficient strings, index = power; zero is ``["0"]``."""
    return [format_rational(a) for a in p.coeffs] or ["0"]


def poly_from_strings(items: Sequence[str]) -> Poly:
    return Poly(parse_rational(s) for s in items)


def poly_to_json(p: Poly) -> str:
    return json.dumps(poly_to_strings(p))


def poly_from_json(text: str) -> Poly:
    items = json.loads(text)
    if not isinstance(items, list):
        raise ValueError("polynomial JSON must be an array of strings")
    return poly_from_strings(items)
