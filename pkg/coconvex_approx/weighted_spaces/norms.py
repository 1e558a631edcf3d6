#  ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++  #
#  This file is part of coconvex_approx (weighted shape-preserving polynomial approximation)     #
#  Copyright © 2026 The coconvex_approx developers.                                              #
#                                                                                                #
#  This program is free software: you can redistribute it and/or modify it under the terms of    #
#  the GNU General Public License as published by the Free Software Foundation, either version   #
#  3 of the License, or (at your option) any later version.                                      #
#                                                                                                #
#  This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;     #
#  without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.     #
#  See the GNU General Public License for more details.                                          #
#                                                                                                #
#  You should have received a copy of the GNU General Public License along with this program.    #
#  If not, see <http://www.gnu.org/licenses/>.                                                   #
#  ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++  #

from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, Sequence
import logging
import math
import numpy as np
from scipy.integrate import quad
from scipy.optimize import minimize_scalar
from ..utilities import ParameterError, EvaluationError, evaluate_function, chebyshev_points
from .jacobi import WeightedNormParams, weight_eval, JacobiWeight
from .quadrature import composite_jacobi_rule, QuadratureKind


@dataclass(frozen=True)
class NormDiscretization:

    """
    The discrete stand-in for a weighted norm that both the norm evaluation and the best-approximation solvers use.
    For finite p, ``weights`` are quadrature weights (endpoint factors (1+u)^{p alpha} (1-u)^{p beta} and the interval
    Jacobian included) and the norm of r is (sum weights |r|^p)^{1/p}. For p = inf, ``points`` is a Chebyshev grid,
    ``weights`` are the values of the Jacobi weight there, and the norm is max weights |r|.

    :param points: reference coordinates u in [-1, 1]
    :param x: the points mapped to the interval [a, b]
    :param weights: quadrature weights (finite p) or weight values (p = inf)
    :param p: the exponent
    :param kind: the quadrature kind (None for the sup grid)
    """

    points: np.ndarray
    x: np.ndarray
    weights: np.ndarray
    p: float
    kind: QuadratureKind | None

    def norm_of(self, values) -> float:
        """Discrete norm of residual values sampled at the points."""
        values = np.abs(np.asarray(values, dtype=float))
        if math.isinf(self.p):
            return float(np.max(self.weights * values))
        return float(np.dot(self.weights, values ** self.p)) ** (1 / self.p)

    def __len__(self):
        return len(self.points)


def discretize_norm(params: WeightedNormParams, refinement: int = 1, edges: Sequence[float] | None = None) \
        -> NormDiscretization:
    """
    Builds the discretization of a weighted norm.

    :param params: the norm parameters
    :param refinement: multiply the quadrature order (or the number of sup-grid intervals) by this factor
    :param edges: optional panel edges on [-1, 1] for the composite quadrature (finite p only)
    """
    if params.is_sup_norm:
        u = chebyshev_points((params.sup_grid - 1) * refinement + 1)
        return NormDiscretization(u, params.interval.to_interval(u), weight_eval(params.weight, u), params.p, None)
    p = params.p
    rule = composite_jacobi_rule(p * params.alpha, p * params.beta, params.quadrature_order * refinement,
                                 params.panels, None if edges is None else tuple(float(e) for e in edges))
    return NormDiscretization(rule.nodes, params.interval.to_interval(rule.nodes),
                              rule.weights * params.interval.half_width, p, rule.kind)


@dataclass(frozen=True)
class NormResult:

    """
    A weighted norm together with how much to trust it.

    :param value: the computed (quasi-)norm
    :param error_estimate: for finite p, the change when the quadrature order is doubled; for p = inf, the gain of
        the refinement step over the grid maximum (the result is a lower bound for the true ess-sup)
    :param quasi_norm: True when p < 1 (the triangle inequality does not hold)
    :param lower_bound: True for p = inf
    """

    value: float
    error_estimate: float
    quasi_norm: bool
    lower_bound: bool


def _sup_values(f: Callable, params: WeightedNormParams, u: np.ndarray) -> np.ndarray:
    values = evaluate_function(f, params.interval.to_interval(u), require_finite=False)
    finite = np.isfinite(values)
    interior = np.abs(u) < 1
    if not np.all(finite[interior]):
        raise EvaluationError("Non-finite function values inside the interval (first at x = {})."
                              .format(params.interval.to_interval(u[interior & ~finite][0])))
    if not np.all(finite):
        logging.warning("Ignoring non-finite function values at the endpoints of the interval.")
        values = np.where(finite, values, 0.0)
    return weight_eval(params.weight, u) * np.abs(values)


def _weighted_sup(f: Callable, params: WeightedNormParams, refinement: int = 1) -> tuple:
    u = chebyshev_points((params.sup_grid - 1) * refinement + 1)
    values = _sup_values(f, params, u)
    i = int(np.argmax(values))
    grid_max = float(values[i])
    lo, hi = u[max(i - 1, 0)], u[min(i + 1, len(u) - 1)]
    # golden-section refinement around the grid maximizer
    result = minimize_scalar(lambda v: -float(_sup_values(f, params, np.array([v]))[0]), bounds=(lo, hi),
                             method="bounded", options={"xatol": 1e-13})
    refined = max(grid_max, -float(result.fun)) if np.isfinite(result.fun) else grid_max
    return refined, refined - grid_max


def _weighted_power_integral(f: Callable, params: WeightedNormParams, refinement: int = 1) -> float:
    disc = discretize_norm(params, refinement)
    values = evaluate_function(f, disc.x, description="integrand")
    return disc.norm_of(values)


def weighted_lp_norm(f: Callable, params: WeightedNormParams) -> float:
    """
    The weighted (quasi-)norm ||w (f o l)||_p over [-1, 1] (times the interval's Jacobian for finite p), where l maps
    [-1, 1] onto params.interval. Finite p uses the composite Jacobi rule for the endpoint factors
    (1+u)^{p alpha} (1-u)^{p beta}; p = inf takes the maximum over a dense Chebyshev grid followed by one golden-section
    refinement around the grid maximizer.

    :param f: the function, on params.interval
    :param params: the norm parameters
    """
    if params.is_sup_norm:
        return _weighted_sup(f, params)[0]
    return _weighted_power_integral(f, params)


def weighted_lp_norm_report(f: Callable, params: WeightedNormParams) -> NormResult:
    """
    Like :func:`weighted_lp_norm`, but also returns an error estimate and the quasi-norm / lower-bound flags.

    :param f: the function, on params.interval
    :param params: the norm parameters
    """
    if params.is_sup_norm:
        value, gain = _weighted_sup(f, params)
        return NormResult(value, gain, False, True)
    value = _weighted_power_integral(f, params)
    finer = _weighted_power_integral(f, params, refinement=2)
    return NormResult(value, abs(finer - value), params.is_quasi_norm, False)


def split_weighted_integral_difference(f: Callable, g: Callable, weight: JacobiWeight, interval: Sequence[float],
                                       breakpoints: Sequence[float] = (), limit: int = 500) -> float:
    """
    The quantity  int_a^b |w(x) f(x)| dx - int_a^b |w(x) g(x)| dx  with the Jacobi weight formula evaluated literally
    at x in [a, b] (so it may be negative outside [-1, 1]). This is a difference of two integrals, NOT a norm of f - g;
    it exists to reproduce computations that use it.

    :param f: first function
    :param g: second function (typically the approximating polynomial)
    :param weight: the weight whose formula (1 + x)^alpha (1 - x)^beta is used as is
    :param interval: the integration interval [a, b]
    :param breakpoints: points in (a, b) where an integrand is not smooth
    :param limit: subinterval limit for the adaptive integrator
    """
    a, b = interval
    for exponent, sign_changes in ((weight.alpha, a < -1), (weight.beta, b > 1)):
        if sign_changes and exponent != math.floor(exponent):
            raise ParameterError("A non-integer exponent cannot be evaluated literally outside of [-1, 1].")

    def raw_weight(x):
        return (1 + x) ** weight.alpha * (1 - x) ** weight.beta

    points = sorted(set(float(x) for x in breakpoints if a < x < b) | {x for x in (-1.0, 1.0) if a < x < b})
    first = quad(lambda x: abs(raw_weight(x) * f(x)), a, b, points=points or None, limit=limit)[0]
    second = quad(lambda x: abs(raw_weight(x) * g(x)), a, b, points=points or None, limit=limit)[0]
    return first - second
