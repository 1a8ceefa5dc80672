"""Exact computation of probabilistic central factorial numbers, central Bell
and central Fubini polynomials for random variables given by their moments."""

from .classical import (
    Triangle,
    bell_phi,
    central_bell_classical,
    central_factorial_poly,
    central_T,
    complete_bell,
    partial_bell,
    stirling2,
)
from .exact import Poly, falling_factorial_poly, format_rational, parse_rational, poly_derive, poly_eval
from .moments import MomentModel, mgf_series, moment, parse_rv, standard_models, sum_power_moment
from .probabilistic import (
    ProbCentralTable,
    central_bell_Y,
    central_fubini_Y,
    central_T_Y,
    poisson_central_bell,
    prob_bell_phi_Y,
    prob_stirling2_Y,
)
from .series import (
    TruncatedSeries,
    egf_coeff,
    series_exp,
    series_log,
    series_mul,
    series_reciprocal,
    series_sqrt,
)

__version__ = "0.1.0"
