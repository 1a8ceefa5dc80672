"""Random variables given by exact moment sequences.

A :class:`MomentModel` answers ``E[Y^n]`` exactly.  Sums ``S_k`` of ``k``
independent copies are handled through powers of the moment generating
series.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .classical import stirling2
from .exact import as_rational, format_rational, parse_rational
from .series import RATIONAL, TruncatedSeries, egf_coeff, series_mul

KINDS = ("constant", "bernoulli", "poisson", "finite_discrete", "raw")


class MomentOrderError(ValueError):
    """A raw model was asked for a moment beyond its declared order."""


@dataclass(frozen=True, eq=False)
class MomentModel:
    kind: str
    params: tuple
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False,
                                  compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")

    @classmethod
    def constant(cls, c) -> MomentModel:
        return cls("constant", (as_rational(c),))

    @classmethod
    def bernoulli(cls, p) -> MomentModel:
        p = as_rational(p)
        if not 0 <= p <= 1:
            raise ValueError(f"bernoulli parameter {p} outside [0, 1]")
        return cls("bernoulli", (p,))

    @classmethod
    def poisson(cls, alpha) -> MomentModel:
        alpha = as_rational(alpha)
        if alpha <= 0:
            raise ValueError(f"poisson parameter must be positive, got {alpha}")
        return cls("poisson", (alpha,))

    @classmethod
    def finite_discrete(cls, support: Sequence[tuple]) -> MomentModel:
        pairs = tuple((as_rational(v), as_rational(w)) for v, w in support)
        if not pairs:
            raise ValueError("finite_discrete needs at least one support point")
        if any(w <= 0 for _, w in pairs):
            raise ValueError("finite_discrete weights must be positive")
        if sum(w for _, w in pairs) != 1:
            raise ValueError("finite_discrete weights must sum to 1")
        return cls("finite_discrete", pairs)

    @classmethod
    def raw(cls, moments: Sequence) -> MomentModel:
        """Moments ``E[Y^1], E[Y^2], ...``; ``E[Y^0] = 1`` is implied."""
        return cls("raw", tuple(as_rational(m) for m in moments))

    @property
    def max_order(self) -> int | None:
        """Highest supported moment, or None when unbounded."""
        return len(self.params) if self.kind == "raw" else None

    def spec(self) -> str:
        if self.kind == "finite_discrete":
            body = ",".join(f"{format_rational(v)}={format_rational(w)}" for v, w in self.params)
            return f"discrete:{body}"
        return f"{self.kind}:" + ",".join(format_rational(p) for p in self.params)

    def __str__(self) -> str:
        return self.spec()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MomentModel):
            return NotImplemented
        return (self.kind, self.params) == (other.kind, other.params)

    def __hash__(self) -> int:
        return hash((self.kind, self.params))

    def moment(self, n: int) -> Fraction:
        return moment(self, n)


def parse_rv(text: str) -> MomentModel:
    """Parse ``constant:<q>``, ``bernoulli:<q>``, ``poisson:<q>``,
    ``discrete:<v>=<w>,...`` or ``raw:<m1>,<m2>,...``."""
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise ValueError(f"random variable spec needs 'kind:params', got {text!r}")
    kind = kind.strip().lower()
    if kind in ("constant", "bernoulli", "poisson"):
        return getattr(MomentModel, kind)(parse_rational(body))
    if kind in ("discrete", "finite_discrete"):
        pairs = []
        for item in body.split(","):
            v, eq, w = item.partition("=")
            if not eq:
                raise ValueError(f"discrete support item needs 'value=weight', got {item!r}")
            pairs.append((parse_rational(v), parse_rational(w)))
        return MomentModel.finite_discrete(pairs)
    if kind == "raw":
        items = [s for s in body.split(",") if s.strip()]
        return MomentModel.raw([parse_rational(s) for s in items])
    raise ValueError(f"unknown random variable kind {kind!r}")


def _compute_moment(model: MomentModel, n: int) -> Fraction:
    kind, params = model.kind, model.params
    if n == 0:
        return Fraction(1)
    if kind == "constant":
        return params[0] ** n
    if kind == "bernoulli":
        return params[0]
    if kind == "poisson":
        alpha = params[0]
        return sum((stirling2(n, k) * alpha**k for k in range(n + 1)), Fraction(0))
    if kind == "finite_discrete":
        return sum((w * v**n for v, w in params), Fraction(0))
    if n > len(params):
        raise MomentOrderError(f"{model.spec()} declares moments up to order {len(params)}, "
                               f"asked for {n}")
    return params[n - 1]


def moment(model: MomentModel, n: int) -> Fraction:
    """Exact ``E[Y^n]``."""
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    key = ("m", n)
    memo = model._memo
    if key in memo:
        return memo[key]
    value = _compute_moment(model, n)
    with model._lock:
        memo[key] = value
    return value


def mgf_series(model: MomentModel, scale, order: int) -> TruncatedSeries:
    """``E[e^{scale * Y * t}]`` truncated at ``order``."""
    scale = as_rational(scale)
    return TruncatedSeries(
        [moment(model, n) * scale**n / factorial(n) for n in range(order + 1)],
        order, RATIONAL,
    )


def _sum_mgf(model: MomentModel, k: int, order: int) -> TruncatedSeries:
    """``E[e^{t S_k}] = E[e^{tY}]^k`` at ``order``, memoised per (k, order)."""
    key = ("S", k, order)
    memo = model._memo
    if key in memo:
        return memo[key]
    if k == 0:
        value = TruncatedSeries.one(order)
    else:
        value = series_mul(_sum_mgf(model, k - 1, order), mgf_series(model, 1, order))
    with model._lock:
        memo[key] = value
    return value


def sum_power_moment(model: MomentModel, k: int, m: int, order: int | None = None) -> Fraction:
    """``E[S_k^m]`` for ``S_k = Y_1 + ... + Y_k``, ``S_0 = 0``.

    ``order`` (>= m) lets repeated queries share one series power table.
    """
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    if k == 0:
        return Fraction(1 if m == 0 else 0)
    order = m if order is None else order
    if order < m:
        raise ValueError("order must be at least m")
    return egf_coeff(_sum_mgf(model, k, order), m)


STANDARD_MODELS = (
    "constant:1",
    "constant:2",
    "bernoulli:1/3",
    "poisson:2",
    "discrete:1=1/2,2=1/2",
)


def standard_models() -> list[MomentModel]:
    return [parse_rv(s) for s in STANDARD_MODELS]
