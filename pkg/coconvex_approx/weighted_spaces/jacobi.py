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
from dataclasses import dataclass, field, replace
import math
import numpy as np
from ..utilities import AffineMap, DomainError, ParameterError


@dataclass(frozen=True)
class JacobiWeight:

    """
    The Jacobi weight w(x) = (1 + x)^alpha (1 - x)^beta on [-1, 1].

    :param alpha: exponent on (1 + x)
    :param beta: exponent on (1 - x)
    """

    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ParameterError("Jacobi exponents must be finite.")

    @property
    def is_unit(self) -> bool:
        return self.alpha == 0 and self.beta == 0

    def __call__(self, x):
        return weight_eval(self, x)


def weight_eval(w: JacobiWeight, x):
    """
    Evaluates the Jacobi weight. At an endpoint where the corresponding exponent is negative the value is +inf; a zero
    exponent contributes a factor of 1 even at its endpoint.

    :param w: the weight
    :param x: point or array of points in [-1, 1]
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < -1 - 1e-12) or np.any(x > 1 + 1e-12):
        raise DomainError("The Jacobi weight is only defined on [-1, 1].")
    x = np.clip(x, -1.0, 1.0)
    with np.errstate(divide="ignore"):
        value = np.power(1 + x, w.alpha) * np.power(1 - x, w.beta)
    return float(value) if value.ndim == 0 else value


def in_Jp(alpha: float, beta: float, p: float) -> bool:
    """
    Whether both exponents belong to J_p, which is (-1/p, inf) for finite p and [0, inf) for p = inf.

    :param alpha: exponent on (1 + x)
    :param beta: exponent on (1 - x)
    :param p: the L_p exponent, in (0, inf]
    """
    if not p > 0:
        raise ParameterError("The L_p exponent must be positive (got {}).".format(p))
    if math.isinf(p):
        return alpha >= 0 and beta >= 0
    return alpha > -1 / p and beta > -1 / p


@dataclass(frozen=True)
class WeightedNormParams:

    """
    Everything defining the weighted (quasi-)norm ||w (f o l)||_p of a function f given on an interval [a, b], where l
    is the affine map from [-1, 1] onto [a, b] and w is a Jacobi weight on [-1, 1].

    :param weight: the Jacobi weight
    :param p: the exponent, in (0, inf]
    :param interval: the interval [a, b] (as an AffineMap or a pair)
    :param quadrature_order: number of Gauss nodes per quadrature panel (finite p)
    :param panels: number of quadrature panels (finite p)
    :param sup_grid: number of Chebyshev grid points used for the ess-sup (p = inf)
    """

    weight: JacobiWeight = field(default_factory=JacobiWeight)
    p: float = 2.0
    interval: AffineMap = field(default_factory=AffineMap)
    quadrature_order: int = 64
    panels: int = 8
    sup_grid: int = 4097

    def __post_init__(self):
        if not isinstance(self.interval, AffineMap):
            object.__setattr__(self, "interval", AffineMap(float(self.interval[0]), float(self.interval[1])))
        object.__setattr__(self, "p", float(self.p))
        if not in_Jp(self.weight.alpha, self.weight.beta, self.p):
            raise ParameterError("Weight exponents ({}, {}) are not in J_p for p = {}."
                                 .format(self.weight.alpha, self.weight.beta, self.p))
        if self.quadrature_order < 2 or self.panels < 1 or self.sup_grid < 3:
            raise ParameterError("Quadrature order, panel count and sup grid size are too small.")

    @classmethod
    def create(cls, alpha: float = 0.0, beta: float = 0.0, p: float = 2.0, interval=(-1.0, 1.0),
               **kwargs) -> WeightedNormParams:
        return cls(JacobiWeight(alpha, beta), p, interval, **kwargs)

    @property
    def alpha(self) -> float:
        return self.weight.alpha

    @property
    def beta(self) -> float:
        return self.weight.beta

    @property
    def is_sup_norm(self) -> bool:
        return math.isinf(self.p)

    @property
    def is_quasi_norm(self) -> bool:
        return self.p < 1

    def refined(self, factor: int = 2) -> WeightedNormParams:
        """The same norm, discretized with `factor` times as many quadrature nodes (or sup-grid intervals)."""
        return replace(self, quadrature_order=self.quadrature_order * factor,
                       sup_grid=(self.sup_grid - 1) * factor + 1)
