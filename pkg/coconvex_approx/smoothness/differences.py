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
from enum import Enum
from typing import Callable
import numpy as np
from scipy.special import comb
from ..utilities import ParameterError, evaluate_function


class StepMode(Enum):
    #: step h at every x
    CONSTANT = "constant"
    #: step h * phi(x), phi(x) = sqrt(1 - x^2)
    PHI = "phi"


def phi(x):
    """The step-damping factor sqrt(1 - x^2) (zero outside of [-1, 1])."""
    x = np.asarray(x, dtype=float)
    value = np.sqrt(np.clip(1 - x * x, 0.0, None))
    return float(value) if value.ndim == 0 else value


def effective_step(x, h: float, step_mode: StepMode):
    return h * phi(x) if step_mode is StepMode.PHI else np.full_like(np.asarray(x, dtype=float), h)


def admissible_interval(h: float, k: int, step_mode: StepMode) -> tuple | None:
    """
    The closed set of x at which the order-k symmetric difference with step h stays inside [-1, 1], i.e.
    x - kH/2 >= -1 and x + kH/2 <= 1. For the phi step, solving x + c phi(x) = 1 with c = kh/2 gives the boundary
    x = (1 - c^2) / (1 + c^2) explicitly. Returns None when no point qualifies (apart from x = +-1 for the phi step,
    where the step vanishes and so does the difference).

    :param h: step
    :param k: difference order
    :param step_mode: constant or phi step
    """
    c = k * h / 2
    if step_mode is StepMode.CONSTANT:
        bound = 1 - c
    else:
        bound = (1 - c * c) / (1 + c * c)
    if bound < 0:
        return None
    return -bound, bound


def symmetric_difference(f: Callable, x, h: float, k: int, step_mode: StepMode = StepMode.CONSTANT):
    """
    The k-th symmetric difference  sum_{i=0}^{k} C(k, i) (-1)^{k-i} f(x + (2i - k) H / 2)  with H = h (constant step)
    or H = h phi(x) (phi step), and 0 wherever x +- kH/2 leaves [-1, 1]. The function is never evaluated at
    inadmissible points.

    :param f: the function on [-1, 1]
    :param x: point or array of points
    :param h: positive step
    :param k: order, at least 1
    :param step_mode: constant or phi step
    """
    if not h > 0:
        raise ParameterError("The step h must be positive (got {}).".format(h))
    if k < 1:
        raise ParameterError("The difference order must be at least 1.")
    x_array = np.atleast_1d(np.asarray(x, dtype=float))
    step = effective_step(x_array, h, step_mode)
    slack = 4 * np.finfo(float).eps
    admissible = (x_array - k * step / 2 >= -1 - slack) & (x_array + k * step / 2 <= 1 + slack)
    out = np.zeros_like(x_array)
    if np.any(admissible):
        xs, hs = x_array[admissible], step[admissible]
        total = np.zeros_like(xs)
        for i in range(k + 1):
            points = np.clip(xs + (2 * i - k) / 2 * hs, -1.0, 1.0)
            total += comb(k, i, exact=True) * (-1) ** (k - i) * evaluate_function(f, points)
        out[admissible] = total
    return float(out[0]) if np.ndim(x) == 0 else out.reshape(np.shape(x))
