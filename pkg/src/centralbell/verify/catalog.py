"""Executable catalog of identities, each checked by two independent routes.

Every entry is a generator of ``(location, lhs, rhs)`` triples; the runner
stops at the first triple with ``lhs != rhs``.  Comparisons are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, factorial
from typing import Callable, Iterator, Optional, Sequence

from ..classical import (
    bell_phi,
    central_factorial_poly,
    central_T_triangle,
    complete_bell,
    partial_bell,
    partial_bell_triangle,
    stirling2,
)
from ..exact import X, Poly, falling_factorial_poly, format_rational, poly_derive, poly_to_strings
from ..moments import MomentModel, MomentOrderError, mgf_series, moment
from ..probabilistic import ProbCentralTable, poisson_central_bell, prob_stirling2_triangle
from ..series import RATIONAL, TruncatedSeries, series_exp
from . import routes

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass(frozen=True)
class Fault:
    """Add ``delta`` to one entry of a canonical table before checking.

    ``target`` is ``"T_Y"`` (the probabilistic table) or ``"T"`` (the
    classical central factorial triangle).
    """

    n: int
    k: int
    delta: Fraction = Fraction(1)
    target: str = "T_Y"

    def __post_init__(self):
        if self.target not in ("T_Y", "T"):
            raise ValueError(f"unknown fault target {self.target!r}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"fault index ({self.n}, {self.k}) outside the triangle")


@dataclass(frozen=True)
class Mismatch:
    location: dict
    lhs: object
    rhs: object

    def to_dict(self) -> dict:
        return {**self.location, "lhs": _serialize(self.lhs), "rhs": _serialize(self.rhs)}


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    model: str
    order: int
    status: str
    first_mismatch: Optional[Mismatch] = None
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        d = {
            "id": self.identity_id,
            "model": self.model,
            "order": self.order,
            "status": self.status,
            "mismatch": self.first_mismatch.to_dict() if self.first_mismatch else None,
        }
        if self.error is not None:
            d["error"] = self.error
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _serialize(value):
    if isinstance(value, Poly):
        return poly_to_strings(value)
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


class Context:
    """Lazily computed objects shared by every check for one (model, order)."""

    def __init__(self, model: Optional[MomentModel], order: int, fault: Optional[Fault] = None):
        self.model = model
        self.order = order
        self.fault = fault

    @cached_property
    def T(self):
        tri = central_T_triangle(self.order)
        f = self.fault
        if f is not None and f.target == "T" and f.n <= self.order:
            tri = tri.with_entry(f.n, f.k, tri[f.n, f.k] + f.delta)
        return tri

    @cached_property
    def table(self) -> ProbCentralTable:
        table = ProbCentralTable.build(self.model, self.order)
        f = self.fault
        if f is not None and f.target == "T_Y" and f.n <= self.order:
            table = table.perturbed(f.n, f.k, f.delta)
        return table

    @cached_property
    def pstir(self):
        return prob_stirling2_triangle(self.model, self.order)

    @cached_property
    def bell_by_gf(self) -> list[Poly]:
        return routes.central_bell_Y_by_gf(self.model, self.order)

    def moments(self, count: int) -> list[Fraction]:
        return [moment(self.model, m) for m in range(count + 1)]


Check = Callable[[Context], Iterator[tuple]]


@dataclass(frozen=True)
class Entry:
    identity_id: str
    check: Check
    needs_model: bool = True
    model_kind: Optional[str] = None
    description: str = ""

    def applies_to(self, model: Optional[MomentModel]) -> bool:
        if not self.needs_model:
            return True
        if model is None:
            return False
        return self.model_kind is None or model.kind == self.model_kind


# classical identities


def _e2(ctx: Context):
    gf = routes.central_factorial_by_gf(ctx.order)
    for n in range(ctx.order + 1):
        yield {"n": n}, gf[n], central_factorial_poly(n)


def _e3(ctx: Context):
    T = ctx.T
    for n in range(ctx.order + 1):
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + central_factorial_poly(k) * T[n, k]
        yield {"n": n}, X**n, rhs


def _e4(ctx: Context):
    gf = routes.central_T_by_gf(ctx.order)
    T = ctx.T
    for n in range(ctx.order + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, gf[n][k], T[n, k]


def _e7(ctx: Context):
    T = ctx.T
    for n in range(ctx.order + 1):
        bell = Poly(T.row(n))
        for power in range(n + 4):
            yield ({"n": n, "power": power},
                   routes.central_bell_classical_coeff(n, power), bell.coeff(power))


def _e8(ctx: Context):
    for n in range(ctx.order + 1):
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + falling_factorial_poly(k) * stirling2(n, k)
        yield {"n": n}, X**n, rhs


def _e12(ctx: Context):
    for n in range(ctx.order + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, partial_bell(n, k, [1] * (n - k + 1)), stirling2(n, k)


def _sample_args(count: int) -> list[Fraction]:
    return [Fraction(i * i - 3, i + 1) for i in range(1, count + 1)]


def _e14(ctx: Context):
    order = ctx.order
    args = _sample_args(order)
    inner = TruncatedSeries([0] + [a / factorial(i) for i, a in enumerate(args, start=1)],
                            order, RATIONAL)
    gf = series_exp(inner).egf()
    for n in range(order + 1):
        yield {"n": n}, gf[n], complete_bell(n, args)


def _e15(ctx: Context):
    for n in range(ctx.order + 1):
        yield {"n": n}, complete_bell(n, [X] * n), bell_phi(n)


# probabilistic identities


def _e16(ctx: Context):
    gf = routes.prob_stirling2_by_gf(ctx.model, ctx.order)
    for n in range(ctx.order + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, gf[n][k], ctx.pstir[n, k]


def _e18(ctx: Context):
    gf = routes.prob_bell_by_gf(ctx.model, ctx.order)
    for n in range(ctx.order + 1):
        yield {"n": n}, gf[n], Poly(ctx.pstir.row(n))


def _t2_1(ctx: Context):
    gf = routes.central_T_Y_by_series(ctx.model, ctx.order)
    T_Y = ctx.table.T_Y
    for n in range(ctx.order + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, T_Y[n, k], gf[n][k]


def _t2_2(ctx: Context):
    for n in range(ctx.order + 1):
        yield {"n": n}, ctx.bell_by_gf[n], ctx.table.bell_polys[n]


def _t2_3(ctx: Context):
    for n in range(ctx.order + 1):
        bell = ctx.table.bell_polys[n]
        for power in range(n + 4):
            lhs = routes.central_bell_Y_double_sum_coeff(ctx.model, n, power, ctx.order)
            yield {"n": n, "power": power}, lhs, bell.coeff(power)


def _t2_4(ctx: Context):
    for n in range(ctx.order + 1):
        yield ({"n": n}, routes.central_bell_Y_stirling_triple(ctx.pstir, n),
               ctx.table.bell_polys[n])


def _t2_5(ctx: Context):
    gf = routes.central_fubini_Y_by_gf(ctx.model, ctx.order)
    for n in range(ctx.order + 1):
        yield {"n": n}, ctx.table.fubini_polys[n], gf[n]


def _t2_6(ctx: Context):
    for n in range(ctx.order + 1):
        yield ({"n": n}, routes.central_fubini_Y_stirling_triple(ctx.pstir, n),
               ctx.table.fubini_polys[n])


def _t2_7(ctx: Context):
    pb = routes.central_bell_Y_by_partial_bell(ctx.model, ctx.order)
    for n in range(ctx.order + 1):
        yield {"n": n}, pb[n], ctx.table.bell_polys[n]


def _t2_8(ctx: Context):
    bell = ctx.table.bell_polys
    for n in range(ctx.order):
        rhs = Poly()
        for l in range(n // 2 + 1):
            rhs = rhs + bell[n - 2 * l] * (comb(n, 2 * l) * Fraction(1, 4**l)
                                           * moment(ctx.model, 2 * l + 1))
        yield {"n": n + 1}, bell[n + 1], X * rhs


def _grid(size: int) -> tuple[list[Fraction], list[Fraction]]:
    xs = [Fraction(i, 2) - 1 for i in range(size)]
    ys = [Fraction(2 * i + 1, 3) - 2 for i in range(size)]
    return xs, ys


def _t2_9(ctx: Context):
    bell = ctx.table.bell_polys
    for n in range(ctx.order + 1):
        # both sides have degree <= n in each variable: n + 1 nodes per axis decide equality
        xs, ys = _grid(max(5, n + 1))
        for x in xs:
            bx = [bell[k](x) for k in range(n + 1)]
            for y in ys:
                rhs = sum((comb(n, k) * bx[k] * bell[n - k](y) for k in range(n + 1)),
                          Fraction(0))
                yield {"n": n, "x": format_rational(x), "y": format_rational(y)}, \
                    bell[n](x + y), rhs


def _t2_10(ctx: Context):
    numbers = [p(1) for p in ctx.bell_by_gf[1:]]
    tri = partial_bell_triangle(numbers, ctx.order)
    for n in range(ctx.order + 1):
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + falling_factorial_poly(k) * tri[n, k]
        yield {"n": n}, ctx.table.bell_polys[n], rhs


def _t2_11(ctx: Context):
    args = [m * ctx.bell_by_gf[m - 1] for m in range(1, ctx.order + 1)]
    tri = partial_bell_triangle(args, ctx.order)
    T_Y = ctx.table.T_Y
    for n in range(ctx.order + 1):
        for k in range(n + 1):
            lhs = Poly([Fraction(k) ** j * T_Y[n - k, j] for j in range(n - k + 1)]) * comb(n, k)
            yield {"n": n, "k": k}, lhs, tri[n, k]


def _t2_12(ctx: Context):
    tri = partial_bell_triangle(ctx.bell_by_gf[1:], ctx.order)
    T_Y = ctx.table.T_Y
    for n in range(ctx.order + 1):
        for k in range(n + 1):
            coeffs = [Fraction(0)] * (n + 1)
            for j in range(k, n + 1):
                coeffs[j] = stirling2(j, k) * T_Y[n, j]
            yield {"n": n, "k": k}, tri[n, k], Poly(coeffs)


def _t2_13(ctx: Context):
    bell = ctx.table.bell_polys
    T_Y = ctx.table.T_Y
    for n in range(ctx.order + 1):
        for k in range(1, n + 2):
            rhs = Poly()
            for j in range(n - k + 1):
                rhs = rhs + bell[j] * (comb(n, j) * T_Y[n - j, k])
            yield {"n": n, "k": k}, poly_derive(bell[n], k), rhs * factorial(k)


def _t2_14(ctx: Context):
    tri = partial_bell_triangle(routes.even_index_args(ctx.model, ctx.order), ctx.order)
    T_Y = ctx.table.T_Y
    for n in range(ctx.order // 2 + 1):
        for k in range(n + 1):
            yield {"n": 2 * n, "k": 2 * k}, T_Y[2 * n, 2 * k], tri[2 * n, 2 * k]


def _e41(ctx: Context):
    tri = partial_bell_triangle(routes.central_T_Y_args(ctx.model, ctx.order), ctx.order)
    T_Y = ctx.table.T_Y
    for n in range(ctx.order + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, T_Y[n, k], tri[n, k]


def _e43(ctx: Context):
    alpha = ctx.model.params[0]
    for scale in (Fraction(1, 2), Fraction(-1, 2)):
        lhs = mgf_series(ctx.model, scale, ctx.order)
        rhs = routes.poisson_mgf_by_composition(alpha, scale, ctx.order)
        for n in range(ctx.order + 1):
            yield {"scale": format_rational(scale), "n": n}, lhs[n], rhs[n]


def _t2_15(ctx: Context):
    alpha = ctx.model.params[0]
    for n in range(ctx.order + 1):
        yield {"n": n}, poisson_central_bell(alpha, n), ctx.table.bell_polys[n]


def _bernoulli(ctx: Context):
    p = ctx.model.params[0]
    T_Y = ctx.table.T_Y
    for n in range(ctx.order // 2 + 1):
        for k in range(n + 1):
            yield ({"n": 2 * n, "k": 2 * k}, T_Y[2 * n, 2 * k],
                   p ** (2 * k) * ctx.T[2 * n, 2 * k])


CATALOG: tuple[Entry, ...] = (
    Entry("E2_CF_GF", _e2, False, description="central factorial generating function"),
    Entry("E3_DEF_T", _e3, False, description="x^n in the central factorial basis"),
    Entry("E4_T_GF", _e4, False, description="T(n,k) generating function"),
    Entry("E7_CB_EXPL", _e7, False, description="classical central Bell double sum"),
    Entry("E8_STIR", _e8, False, description="x^n in the falling factorial basis"),
    Entry("E12_PB1", _e12, False, description="B_{n,k}(1,...,1) = Stirling"),
    Entry("E14_CB_SUM", _e14, False, description="complete Bell = sum of partial Bell"),
    Entry("E15_CB_X", _e15, False, description="B_n(x,...,x) = phi_n(x)"),
    Entry("E16_PSTIR", _e16, description="probabilistic Stirling: series vs explicit sum"),
    Entry("E18_PBELL_GF", _e18, description="probabilistic Bell generating function"),
    Entry("T2_1", _t2_1, description="T^Y explicit sum vs generating function"),
    Entry("T2_2", _t2_2, description="central Bell generating function"),
    Entry("T2_3", _t2_3, description="central Bell (l, j) expansion, coefficient-wise"),
    Entry("T2_4", _t2_4, description="central Bell via probabilistic Stirling products"),
    Entry("T2_5", _t2_5, description="Fubini explicit sum vs reciprocal series"),
    Entry("T2_6", _t2_6, description="Fubini via probabilistic Stirling products"),
    Entry("T2_7", _t2_7, description="central Bell via partial Bell of x-weighted moments"),
    Entry("T2_8", _t2_8, description="central Bell recurrence"),
    Entry("T2_9", _t2_9, description="convolution formula"),
    Entry("T2_10", _t2_10, description="central Bell via central Bell numbers"),
    Entry("T2_11", _t2_11, description="T^Y vs partial Bell of (j+1) B_j(x)"),
    Entry("T2_12", _t2_12, description="partial Bell of B_j(x) vs Stirling-weighted T^Y"),
    Entry("T2_13", _t2_13, description="higher derivatives in x"),
    Entry("T2_14", _t2_14, description="T^Y(2n,2k) as even-index partial Bell"),
    Entry("E41_PB_T", _e41, description="T^Y(n,k) as partial Bell"),
    Entry("E43_POIS_MGF", _e43, model_kind="poisson", description="Poisson scaled mgf"),
    Entry("POISSON_T215", _t2_15, model_kind="poisson", description="Poisson closed form"),
    Entry("BERNOULLI_PK", _bernoulli, model_kind="bernoulli",
          description="Bernoulli T^Y(2n,2k) = p^{2k} T(2n,2k)"),
)

_BY_ID = {e.identity_id: e for e in CATALOG}
IDENTITY_IDS = tuple(_BY_ID)


def get_entry(identity_id: str) -> Entry:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def _run(entry: Entry, ctx: Context) -> IdentityReport:
    label = ctx.model.spec() if entry.needs_model else "n/a"
    try:
        for location, lhs, rhs in entry.check(ctx):
            if lhs != rhs:
                return IdentityReport(entry.identity_id, label, ctx.order, FAIL,
                                      Mismatch(location, lhs, rhs))
    except MomentOrderError as exc:
        return IdentityReport(entry.identity_id, label, ctx.order, ERROR, error=str(exc))
    return IdentityReport(entry.identity_id, label, ctx.order, PASS)


def verify_identity(identity_id: str, model: Optional[MomentModel] = None, order: int = 10,
                    fault: Optional[Fault] = None) -> IdentityReport:
    """Check one catalog entry for every index up to ``order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    entry = get_entry(identity_id)
    if entry.needs_model:
        if model is None:
            raise ValueError(f"{identity_id} needs a random variable model")
        if not entry.applies_to(model):
            raise ValueError(f"{identity_id} requires a {entry.model_kind} model, "
                             f"got {model.spec()}")
    return _run(entry, Context(model if entry.needs_model else None, order, fault))


def verify_all(models: Sequence[MomentModel], order: int = 10,
               fault: Optional[Fault] = None) -> list[IdentityReport]:
    """Model-free entries once, then each applicable entry for each model in order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    reports = []
    free = Context(None, order, fault)
    for entry in CATALOG:
        if not entry.needs_model:
            reports.append(_run(entry, free))
    for model in models:
        ctx = Context(model, order, fault)
        for entry in CATALOG:
            if entry.needs_model and entry.applies_to(model):
                reports.append(_run(entry, ctx))
    return reports
