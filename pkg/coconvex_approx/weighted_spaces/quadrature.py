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
from enum import Enum
from functools import lru_cache
from typing import Callable, Sequence
import logging
import math
import numpy as np
from scipy.special import roots_legendre, roots_jacobi, beta as beta_function, comb, eval_jacobi
from scipy.integrate import quad
from ..utilities import EvaluationError, ParameterError, evaluate_function

#: relative tolerance of the exactness checks performed when a rule is built (scaled by order^2)
EXACTNESS_TOLERANCE = 1e-12
#: relative mass error above which a composite rule for a non-polynomial weight is reported
COMPOSITE_MASS_TOLERANCE = 1e-10


class QuadratureKind(Enum):
    GAUSS_LEGENDRE = "gauss-legendre"
    GAUSS_JACOBI = "gauss-jacobi"
    ADAPTIVE_COMPOSITE = "adaptive-composite"


@dataclass(frozen=True)
class QuadratureRule:

    """
    Nodes and positive weights on [-1, 1] approximating the weighted integral of g against
    (1 + x)^left_exponent (1 - x)^right_exponent, i.e. sum(weights * g(nodes)).

    :param nodes: quadrature nodes, strictly inside (-1, 1)
    :param weights: positive quadrature weights (the endpoint factors are already absorbed)
    :param kind: which family of rule this is
    :param order: nodes per panel
    :param left_exponent: exponent of the (1 + x) factor that is integrated exactly
    :param right_exponent: exponent of the (1 - x) factor that is integrated exactly
    :param panels: number of panels the nodes are distributed over
    """

    nodes: np.ndarray
    weights: np.ndarray
    kind: QuadratureKind
    order: int
    left_exponent: float = 0.0
    right_exponent: float = 0.0
    panels: int = 1

    def integrate(self, values) -> float:
        """Applies the rule to precomputed values g(nodes)."""
        return float(np.dot(self.weights, values))

    def __call__(self, g: Callable) -> float:
        return self.integrate(evaluate_function(g, self.nodes, description="integrand"))

    def __len__(self):
        return len(self.nodes)


def jacobi_moment(k: int, left_exponent: float, right_exponent: float) -> float:
    """
    Exact value of the integral of x^k (1 + x)^a (1 - x)^b over [-1, 1], using x = (1 + x) - 1 and Beta integrals.

    :param k: power of x
    :param left_exponent: a > -1
    :param right_exponent: b > -1
    """
    a, b = left_exponent, right_exponent
    total = 0.0
    for j in range(k + 1):
        total += comb(k, j, exact=True) * (-1) ** (k - j) * \
            2 ** (a + j + b + 1) * beta_function(a + j + 1, b + 1)
    return total


def check_exactness(rule: QuadratureRule, degree: int) -> QuadratureRule:
    """
    Verifies that a rule integrates every polynomial of the given degree exactly against its weight and returns it.
    Degree 0 is checked against the mass of the weight; higher degrees against the orthogonality of the weight's own
    Jacobi polynomials, which stay well conditioned at high degree where the monomial moments do not.

    :param rule: the rule to check
    :param degree: the degree of exactness the rule claims
    :raises EvaluationError: if some polynomial of degree at most ``degree`` is missed
    """
    a, b = rule.left_exponent, rule.right_exponent
    mass = jacobi_moment(0, a, b)
    tolerance = EXACTNESS_TOLERANCE * max(rule.order, 1) ** 2
    misses = [(0, abs(rule.integrate(np.ones_like(rule.nodes)) - mass), mass)]
    if degree >= 1:
        ks = np.arange(1, degree + 1)[:, None]
        # scipy's Jacobi polynomials are orthogonal for (1 - x)^alpha (1 + x)^beta
        values = eval_jacobi(ks, b, a, rule.nodes[None, :])
        misses += zip(range(1, degree + 1), np.abs(values @ rule.weights), np.abs(values) @ rule.weights)
    for k, miss, scale in misses:
        if miss > tolerance * max(scale, mass):
            raise EvaluationError("Quadrature rule ({}, order {}, exponents {}, {}) is not exact for degree {}: "
                                  "misses by {:.3g}.".format(rule.kind.value, rule.order, a, b, k, miss))
    return rule


def _freeze(*arrays):
    for array in arrays:
        array.flags.writeable = False
    return arrays


@lru_cache(maxsize=64)
def gauss_legendre_rule(order: int) -> QuadratureRule:
    """
    The order-point Gauss-Legendre rule (exact for polynomials of degree up to 2 order - 1).

    :param order: number of nodes
    """
    if order < 1:
        raise ParameterError("Quadrature order must be positive.")
    nodes, weights = _freeze(*roots_legendre(order))
    return check_exactness(QuadratureRule(nodes, weights, QuadratureKind.GAUSS_LEGENDRE, order), 2 * order - 1)


@lru_cache(maxsize=64)
def gauss_jacobi_rule(order: int, left_exponent: float, right_exponent: float) -> QuadratureRule:
    """
    The order-point Gauss-Jacobi rule for the weight (1 + x)^left_exponent (1 - x)^right_exponent.

    :param order: number of nodes
    :param left_exponent: exponent on (1 + x), > -1
    :param right_exponent: exponent on (1 - x), > -1
    """
    if order < 1:
        raise ParameterError("Quadrature order must be positive.")
    if left_exponent <= -1 or right_exponent <= -1:
        raise ParameterError("Gauss-Jacobi exponents must exceed -1 (got {}, {}).".format(left_exponent,
                                                                                         right_exponent))
    # scipy's Jacobi weight is (1 - x)^alpha (1 + x)^beta
    nodes, weights = _freeze(*roots_jacobi(order, right_exponent, left_exponent))
    rule = QuadratureRule(nodes, weights, QuadratureKind.GAUSS_JACOBI, order, left_exponent, right_exponent)
    return check_exactness(rule, 2 * order - 1)


def _needs_jacobi(exponent: float) -> bool:
    # non-integer or negative exponents make the endpoint factor non-smooth
    return exponent < 0 or exponent != math.floor(exponent)


@lru_cache(maxsize=128)
def composite_jacobi_rule(left_exponent: float, right_exponent: float, order: int = 64, panels: int = 8,
                          edges: Sequence[float] | None = None) -> QuadratureRule:
    """
    Composite rule for the integral of g against (1 + x)^left_exponent (1 - x)^right_exponent on [-1, 1]. The two end
    panels absorb the endpoint factors into Gauss-Jacobi nodes whenever that factor is not smooth; every other panel
    uses Gauss-Legendre nodes with the weight evaluated explicitly. Nodes never touch x = +-1.

    :param left_exponent: exponent on (1 + x), > -1
    :param right_exponent: exponent on (1 - x), > -1
    :param order: nodes per panel
    :param panels: number of equal panels (ignored when edges are given)
    :param edges: optional increasing panel edges from -1 to 1 (e.g. spline knots); must be a tuple to be cached
    """
    if edges is None:
        edges = np.linspace(-1.0, 1.0, panels + 1)
    else:
        edges = np.array(edges, dtype=float)
        if edges[0] != -1 or edges[-1] != 1 or not np.all(np.diff(edges) > 0):
            raise ParameterError("Panel edges must increase from -1 to 1.")
    panel_count = len(edges) - 1
    if panel_count == 1:
        if _needs_jacobi(left_exponent) or _needs_jacobi(right_exponent):
            rule = gauss_jacobi_rule(order, left_exponent, right_exponent)
            return QuadratureRule(rule.nodes, rule.weights, QuadratureKind.GAUSS_JACOBI, order,
                                  left_exponent, right_exponent, 1)

    legendre = gauss_legendre_rule(order)
    all_nodes, all_weights = [], []
    used_jacobi = False
    for j, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        half = (hi - lo) / 2
        if j == 0 and _needs_jacobi(left_exponent):
            base = gauss_jacobi_rule(order, left_exponent, 0.0)
            x = lo + half * (1 + base.nodes)
            w = half ** (left_exponent + 1) * base.weights * np.power(1 - x, right_exponent)
            used_jacobi = True
        elif j == panel_count - 1 and _needs_jacobi(right_exponent):
            base = gauss_jacobi_rule(order, 0.0, right_exponent)
            x = hi - half * (1 - base.nodes)
            w = half ** (right_exponent + 1) * base.weights * np.power(1 + x, left_exponent)
            used_jacobi = True
        else:
            x = lo + half * (1 + legendre.nodes)
            w = half * legendre.weights * np.power(1 + x, left_exponent) * np.power(1 - x, right_exponent)
        all_nodes.append(x)
        all_weights.append(w)

    nodes, weights = _freeze(np.concatenate(all_nodes), np.concatenate(all_weights))
    kind = QuadratureKind.GAUSS_JACOBI if used_jacobi else QuadratureKind.GAUSS_LEGENDRE
    rule = QuadratureRule(nodes, weights, kind, order, left_exponent, right_exponent, panel_count)
    # a polynomial weight of degree left_exponent + right_exponent leaves this much exactness on every panel
    degree = 2 * order - 1 - int(left_exponent + right_exponent)
    if _needs_jacobi(left_exponent) or _needs_jacobi(right_exponent) or degree < 0:
        # no polynomial exactness to verify, only the mass
        mass = jacobi_moment(0, left_exponent, right_exponent)
        miss = abs(rule.integrate(np.ones_like(nodes)) - mass)
        if miss > COMPOSITE_MASS_TOLERANCE * mass:
            logging.warning("Composite rule (order {}, exponents {}, {}) misses the weight's mass by {:.3g}; "
                            "consider a higher order.".format(order, left_exponent, right_exponent, miss))
        return rule
    return check_exactness(rule, degree)


def adaptive_weighted_integral(g: Callable, left_exponent: float, right_exponent: float,
                               tol: float = 1e-10, limit: int = 2000) -> tuple:
    """
    Adaptive QUADPACK integration (algebraic endpoint weights) of g against (1 + x)^left_exponent
    (1 - x)^right_exponent over [-1, 1]. Serves as an independent check on the Gaussian rules.

    :param g: integrand without the endpoint factors (scalar function)
    :param left_exponent: exponent on (1 + x), > -1
    :param right_exponent: exponent on (1 - x), > -1
    :param tol: absolute and relative tolerance requested
    :param limit: maximum number of subintervals
    :return: tuple of (value, estimated absolute error)
    """
    value, error = quad(lambda x: float(g(x)), -1.0, 1.0, weight="alg", wvar=(left_exponent, right_exponent),
                        epsabs=tol, epsrel=tol, limit=limit)
    return value, error
