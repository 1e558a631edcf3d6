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
from typing import Callable
import numpy as np
from .errors import DomainError, EvaluationError


@dataclass(frozen=True)
class AffineMap:

    """
    The increasing affine map from the reference interval [-1, 1] onto the interval [a, b]. All internal computations
    of this package run on [-1, 1]; an AffineMap carries results over to general intervals (e.g. [-1, 2]).

    :param a: left end of the target interval
    :param b: right end of the target interval
    """

    a: float = -1.0
    b: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)) or not self.a < self.b:
            raise DomainError("Interval [{}, {}] is not a finite interval with a < b.".format(self.a, self.b))

    @property
    def center(self) -> float:
        return (self.a + self.b) / 2

    @property
    def half_width(self) -> float:
        """Derivative of the map, i.e. the Jacobian factor dx/du."""
        return (self.b - self.a) / 2

    @property
    def is_reference(self) -> bool:
        return self.a == -1 and self.b == 1

    def to_interval(self, u):
        """Maps reference coordinates u in [-1, 1] to x in [a, b]."""
        if self.is_reference:
            return u
        return self.center + self.half_width * np.asarray(u, dtype=float)

    def from_interval(self, x):
        """Maps x in [a, b] back to reference coordinates in [-1, 1]."""
        if self.is_reference:
            return x
        return (np.asarray(x, dtype=float) - self.center) / self.half_width

    def contains(self, x, rel_tol: float = 1e-12) -> bool:
        """Whether every given point lies in [a, b], up to a tolerance relative to the interval width."""
        x = np.asarray(x, dtype=float)
        slack = rel_tol * (self.b - self.a)
        return bool(np.all((x >= self.a - slack) & (x <= self.b + slack)))

    def __repr__(self):
        return "AffineMap({}, {})".format(self.a, self.b)


def wrap_to_range(x, range_min, range_max, mirror=False):
    """
    Wraps the input x into the given range, either jumping back to the other side of the range at the boundaries,
    or if the mirror parameter is set, reflecting at the boundaries. Works elementwise on numpy arrays.

    :param x: the input (scalar or array)
    :param range_min: minimum of wrapping range
    :param range_max: maximum of wrapping range
    :param mirror: whether to mirror at the boundaries
    """
    width = (range_max - range_min)
    if mirror:
        mod_double_range = np.mod(np.asarray(x, dtype=float) - range_min, 2 * width)
        out = np.where(mod_double_range > width, 2 * width - mod_double_range, mod_double_range) + range_min
    else:
        out = np.mod(np.asarray(x, dtype=float) - range_min, width) + range_min
    return float(out) if np.ndim(out) == 0 else out


def periodic_extension(f: Callable, period_start: float = -np.pi, period_end: float = np.pi) -> Callable:
    """
    Turns a function known on one period into its periodic extension to the whole real line.

    :param f: function defined on [period_start, period_end)
    :param period_start: start of the period
    :param period_end: end of the period
    """
    def extended(x):
        return evaluate_function(f, wrap_to_range(x, period_start, period_end))
    return extended


def evaluate_function(f: Callable, x, require_finite: bool = True, description: str = "function"):
    """
    Evaluates a user-supplied function on a scalar or an array of points. Numpy-aware functions are called once on
    the whole array; functions that only accept scalars (or that return something of the wrong shape) are evaluated
    point by point instead.

    :param f: the function
    :param x: scalar or array of points
    :param require_finite: if True, raise an :class:`EvaluationError` on NaN or infinite values
    :param description: name of the function, used in error messages
    :return: float if x is a scalar, otherwise a float array of the same shape as x
    """
    x_array = np.asarray(x, dtype=float)
    try:
        with np.errstate(all="ignore"):
            values = np.asarray(f(x_array), dtype=float)
        if values.shape != x_array.shape:
            values = np.broadcast_to(values, x_array.shape).astype(float) if values.ndim == 0 else None
    except (TypeError, ValueError):
        values = None
    if values is None:
        with np.errstate(all="ignore"):
            values = np.array([float(f(float(xi))) for xi in x_array.ravel()]).reshape(x_array.shape)
    if require_finite and not np.all(np.isfinite(values)):
        bad = x_array[~np.isfinite(values)] if x_array.ndim > 0 else x_array
        raise EvaluationError("The {} produced non-finite values (first offending point: x = {})."
                              .format(description, np.ravel(bad)[0]))
    return float(values) if values.ndim == 0 else values


def chebyshev_points(m: int, lo: float = -1.0, hi: float = 1.0) -> np.ndarray:
    """
    The m Chebyshev extreme points (Chebyshev points of the second kind) on [lo, hi], in increasing order, including
    both endpoints. Computed with the sine form of the cosine formula so the grid is exactly symmetric and contains
    the midpoint when m is odd.

    :param m: number of points (at least 2)
    :param lo: left end
    :param hi: right end
    """
    if m < 2:
        raise DomainError("A Chebyshev grid needs at least two points.")
    j = np.arange(m)
    u = np.sin(np.pi * (2 * j - (m - 1)) / (2 * (m - 1)))
    u[0], u[-1] = -1.0, 1.0
    return (lo + hi) / 2 + (hi - lo) / 2 * u
