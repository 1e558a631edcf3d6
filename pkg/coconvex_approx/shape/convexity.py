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
from math import factorial
from typing import Callable, Sequence
import numpy as np
from ..polynomials import ChebyshevPolynomial
from ..utilities import DomainError, ParameterError, AffineMap, evaluate_function
from .inflection import InflectionPartition

#: default tolerance of the polynomial shape checks, relative to max |p''| on the segment checked
SHAPE_TOLERANCE = 1e-9


def extrema_on(q: ChebyshevPolynomial, lo: float, hi: float) -> tuple:
    """
    Exact minimum and maximum of a polynomial over [lo, hi] (a subinterval of its domain): the candidates are the
    endpoints and the real roots of q' inside the interval.

    :return: tuple (min, max)
    """
    candidates = [lo, hi]
    if q.degree() >= 2:
        candidates.extend(r for r in q.derivative().roots() if lo < r < hi)
    values = np.asarray(q(np.array(candidates)))
    return float(np.min(values)), float(np.max(values))


def _segments_in_domain(p: ChebyshevPolynomial, Y: InflectionPartition) -> list:
    affine_map = p.affine_map
    return [(float(affine_map.to_interval(seg.lo)), float(affine_map.to_interval(seg.hi)), seg.sign)
            for seg in Y.segments()]


def coconvexity_residuals(p: ChebyshevPolynomial, Y: InflectionPartition) -> list:
    """
    For each segment [y_{i+1}, y_i] of the partition, the exact minimum of sign_i p'' over the segment, together with
    the scale max(1, max |p''|) of that segment. Segments are mapped to p's domain when it is not [-1, 1].

    :param p: the polynomial
    :param Y: the inflection partition (empty for convexity)
    :return: list of (residual, scale) pairs, one per segment, right to left
    """
    second = p.derivative(2)
    out = []
    for lo, hi, sign in _segments_in_domain(p, Y):
        low, high = extrema_on(second, lo, hi)
        residual = low if sign > 0 else -high
        out.append((residual, max(1.0, abs(low), abs(high))))
    return out


def is_convex(p: ChebyshevPolynomial, tol: float = SHAPE_TOLERANCE) -> bool:
    """
    Whether p'' >= -tol * max(1, max |p''|) on the whole domain, with the extrema of p'' found exactly from the roots of
    p''' (companion-matrix eigenvalues) and the endpoints.

    :param p: the polynomial
    :param tol: relative tolerance
    """
    return is_coconvex(p, InflectionPartition(), tol)


def is_coconvex(p: ChebyshevPolynomial, Y: InflectionPartition, tol: float = SHAPE_TOLERANCE) -> bool:
    """
    Whether p is coconvex with respect to Y: on every segment [y_{i+1}, y_i] the second derivative has the segment's
    sign (nonnegative on the rightmost segment, alternating leftwards) up to tol times the segment's max |p''|. Each
    segment is checked exactly, as in :func:`is_convex`.

    :param p: the polynomial
    :param Y: the inflection partition
    :param tol: relative tolerance
    """
    return all(residual >= -tol * scale for residual, scale in coconvexity_residuals(p, Y))


def is_coconvex_function(f2: Callable, Y: InflectionPartition, interval: Sequence[float] = (-1.0, 1.0),
                         samples: int = 10001, tol: float = SHAPE_TOLERANCE) -> bool:
    """
    Sampled coconvexity check for a function given only through its second derivative (black-box functions cannot be
    checked exactly).

    :param f2: the second derivative, on the interval
    :param Y: the inflection partition (in reference coordinates)
    :param interval: interval the function lives on
    :param samples: number of sample points
    :param tol: tolerance relative to max(1, max |f''|)
    """
    affine_map = AffineMap(*interval)
    u = np.linspace(-1.0, 1.0, samples)
    values = evaluate_function(f2, affine_map.to_interval(u), description="second derivative")
    scale = max(1.0, float(np.max(np.abs(values))))
    return bool(np.all(Y.sign_function(u) * values >= -tol * scale))


def is_k_monotone(f: Callable, k: int, grid_size: int = 1001, tol: float = SHAPE_TOLERANCE,
                  interval: Sequence[float] = (-1.0, 1.0)) -> bool:
    """
    Whether every k-th order divided difference of f over k + 1 consecutive points of a uniform grid is >= -tol.
    Divided differences of high order amplify rounding errors, so the tolerance is widened by an estimate of that
    rounding noise.

    :param f: the function
    :param k: the order (k = 2 is convexity)
    :param grid_size: number of grid points
    :param tol: absolute tolerance
    :param interval: interval to check on
    """
    if k < 1:
        raise ParameterError("The order k must be at least 1.")
    if grid_size < k + 1:
        raise ParameterError("The grid needs at least k + 1 points.")
    x = np.linspace(interval[0], interval[1], grid_size)
    values = evaluate_function(f, x)
    step = x[1] - x[0]
    divided = np.diff(values, n=k) / (factorial(k) * step ** k)
    noise = 16 * np.finfo(float).eps * 2 ** k * np.max(np.abs(values)) / (factorial(k) * step ** k)
    return bool(np.all(divided >= -(tol + noise)))


def convexity_sign_condition(f2: Callable, c: float, window: Sequence[float], samples: int = 1001,
                             tol: float = 1e-12) -> bool:
    """
    Whether f''(x) (x - c) >= -tol on a dense sample of the window, i.e. f changes from concave to convex at c within
    the window.

    :param f2: the second derivative
    :param c: the candidate inflection point
    :param window: [a, a + h], a subinterval of [-1, 1]
    :param samples: number of samples
    :param tol: absolute tolerance
    """
    a, b = window
    if not -1 <= a <= b <= 1:
        raise DomainError("The window [{}, {}] is not inside [-1, 1].".format(a, b))
    x = np.linspace(a, b, samples)
    return bool(np.all(evaluate_function(f2, x, description="second derivative") * (x - c) >= -tol))
