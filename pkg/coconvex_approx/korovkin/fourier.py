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

"""
Module containing Fourier coefficients of 2 pi-periodic functions and the operators built from them: partial Fourier
sums, the Fejer operators F_n (Cesaro means of the partial sums), and the matrix-weighted operators T_n, whose nodal
fractions can be taken literally or replaced by cos kx / sin kx.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import Callable
import math
import numpy as np
from ..utilities import ParameterError, evaluate_function


@dataclass(frozen=True)
class FourierCoefficients:

    """
    Coefficients a_0..a_K and b_0..b_K (b_0 = 0) of f(x) ~ a_0/2 + sum_k (a_k cos kx + b_k sin kx).

    :param a: cosine coefficients, a[k] = a_k
    :param b: sine coefficients, b[k] = b_k, with b[0] = 0
    """

    a: np.ndarray
    b: np.ndarray

    @property
    def K(self) -> int:
        return len(self.a) - 1

    def truncated(self, K: int) -> FourierCoefficients:
        if K > self.K:
            raise ParameterError("Only {} coefficients are available (asked for {}).".format(self.K, K))
        return FourierCoefficients(self.a[:K + 1], self.b[:K + 1])


def fourier_coeffs(f: Callable, K: int) -> FourierCoefficients:
    """
    Fourier coefficients of a 2 pi-periodic function by the trapezoidal rule on N = 8K + 16 equispaced points of
    [-pi, pi), evaluated through one real FFT. Trigonometric polynomials of degree at most K are recovered exactly up
    to rounding, and the rule is spectrally accurate for smooth periodic functions.

    :param f: the function, given at least on [-pi, pi)
    :param K: highest frequency
    """
    if K < 0:
        raise ParameterError("K must be nonnegative.")
    N = 8 * K + 16
    x = -math.pi + 2 * math.pi * np.arange(N) / N
    transform = np.fft.rfft(evaluate_function(f, x))[:K + 1]
    # shifting the grid to start at -pi multiplies the k-th coefficient by (-1)^k
    shifted = (-1.0) ** np.arange(K + 1) * transform
    a = 2 / N * shifted.real
    b = -2 / N * shifted.imag
    b[0] = 0.0
    return FourierCoefficients(a, b)


def _coefficients(f, needed: int) -> FourierCoefficients:
    if isinstance(f, FourierCoefficients):
        return f.truncated(needed)
    return fourier_coeffs(f, needed)


def partial_sum(f, m: int, x):
    """
    The partial Fourier sum S_m(f; x) = a_0/2 + sum_{k=1}^{m} (a_k cos kx + b_k sin kx).

    :param f: the function or its coefficients
    :param m: order, at least 0
    :param x: point or array of points
    """
    coeffs = _coefficients(f, m)
    x = np.asarray(x, dtype=float)
    k = np.arange(1, m + 1)
    angles = np.multiply.outer(x, k)
    value = coeffs.a[0] / 2 + np.cos(angles) @ coeffs.a[1:] + np.sin(angles) @ coeffs.b[1:]
    return float(value) if np.ndim(value) == 0 else value


def fejer_apply(f, n: int, x):
    """
    The Fejer operator F_n(f; x) = a_0/2 + sum_{k=1}^{n} ((n - k)/n) (a_k cos kx + b_k sin kx), the arithmetic mean
    of the partial sums S_0, ..., S_{n-1}.

    :param f: the 2 pi-periodic function or its coefficients
    :param n: order, at least 1
    :param x: point or array of points
    """
    if n < 1:
        raise ParameterError("The Fejer operator needs n >= 1.")
    coeffs = _coefficients(f, n)
    x = np.asarray(x, dtype=float)
    k = np.arange(1, n + 1)
    factors = (n - k) / n
    angles = np.multiply.outer(x, k)
    value = coeffs.a[0] / 2 + np.cos(angles) @ (factors * coeffs.a[1:]) + np.sin(angles) @ (factors * coeffs.b[1:])
    return float(value) if np.ndim(value) == 0 else value


class OperatorMode(Enum):
    #: nodal fractions (kx - x#)/(x* - x_i) and (kx - x*)/(x_i - x#), as displayed
    LITERAL = "literal"
    #: cos kx and sin kx in place of the nodal fractions (recovers the classical Fejer operator)
    REDUCTION = "reduction"


#: default nodal parameters x_*, x_i, x^#
DEFAULT_NODES = (-1.0, 0.0, 1.0)


@dataclass(frozen=True)
class OperatorSpec:

    """
    Parameters of the operators T_n: the triangular array lambda_k^(n) (as a function of k and n) and the nodal
    parameters.

    :param lambdas: function (k, n) -> lambda_k^(n), for 1 <= k <= n
    :param x_star: the node x_*
    :param x_i: the node x_i
    :param x_sharp: the node x^#
    :param mode: literal nodal fractions or the cos/sin reduction
    """

    lambdas: Callable[[int, int], float]
    x_star: float = DEFAULT_NODES[0]
    x_i: float = DEFAULT_NODES[1]
    x_sharp: float = DEFAULT_NODES[2]
    mode: OperatorMode = OperatorMode.REDUCTION

    @classmethod
    def fejer(cls, mode: OperatorMode = OperatorMode.REDUCTION, **nodes) -> OperatorSpec:
        """The Fejer factors lambda_k^(n) = (n - k)/n."""
        return cls(lambda k, n: (n - k) / n, mode=mode, **nodes)

    @classmethod
    def zero(cls, mode: OperatorMode = OperatorMode.LITERAL, **nodes) -> OperatorSpec:
        return cls(lambda k, n: 0.0, mode=mode, **nodes)

    def factors(self, n: int) -> np.ndarray:
        """The row lambda_1^(n), ..., lambda_n^(n)."""
        row = np.array([self.lambdas(k, n) for k in range(1, n + 1)], dtype=float)
        if not np.all(np.isfinite(row)):
            raise ParameterError("The operator's lambda_k^({}) are not all finite.".format(n))
        return row


def tn_apply(f, spec: OperatorSpec, n: int, x):
    """
    The operator T_n(f; x) = a_0/2 + sum_{k=1}^{n} lambda_k^(n) (a_k (kx - x#)/(x* - x_i) + b_k (kx - x*)/(x_i - x#)),
    taken literally in LITERAL mode; REDUCTION mode puts cos kx and sin kx in place of the two fractions.

    :param f: the 2 pi-periodic function or its coefficients
    :param spec: the operator parameters
    :param n: order, at least 1
    :param x: point or array of points
    """
    if n < 1:
        raise ParameterError("T_n needs n >= 1.")
    coeffs = _coefficients(f, n)
    lambdas = spec.factors(n)
    x = np.asarray(x, dtype=float)
    k = np.arange(1, n + 1)
    kx = np.multiply.outer(x, k)
    if spec.mode is OperatorMode.LITERAL:
        if spec.x_star == spec.x_i or spec.x_i == spec.x_sharp:
            raise ParameterError("T_n has a zero denominator: x_* = {}, x_i = {}, x^# = {}."
                                 .format(spec.x_star, spec.x_i, spec.x_sharp))
        first = (kx - spec.x_sharp) / (spec.x_star - spec.x_i)
        second = (kx - spec.x_star) / (spec.x_i - spec.x_sharp)
    else:
        first, second = np.cos(kx), np.sin(kx)
    value = coeffs.a[0] / 2 + first @ (lambdas * coeffs.a[1:]) + second @ (lambdas * coeffs.b[1:])
    return float(value) if np.ndim(value) == 0 else value
