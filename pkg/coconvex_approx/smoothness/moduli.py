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
from dataclasses import dataclass, replace
from typing import Callable, Sequence
import math
import numpy as np
from scipy.optimize import minimize_scalar
from ..polynomials import ChebyshevPartition
from ..utilities import ParameterError, chebyshev_points
from ..weighted_spaces import JacobiWeight, in_Jp, weight_eval, gauss_legendre_rule
from .differences import StepMode, phi, admissible_interval, symmetric_difference

#: nodes per Gauss-Legendre panel when integrating differences for finite p
_PANEL_ORDER = 64


@dataclass(frozen=True)
class ModulusSpec:

    """
    Parameters of a modulus of smoothness  sup_{0 < h <= t} || w phi^r Delta^k f ||_p.

    :param k: difference order
    :param r: power of phi multiplying the difference
    :param step_mode: constant step (classical modulus) or phi step (Ditzian-Totik modulus)
    :param weight: optional Jacobi weight multiplying the difference
    :param p: the exponent of the norm over x
    :param h_grid: number of steps sampled geometrically from t/1000 to t
    :param x_grid: number of x samples (p = inf) or quadrature nodes (finite p) over the admissible set
    """

    k: int = 1
    r: float = 0.0
    step_mode: StepMode = StepMode.PHI
    weight: JacobiWeight | None = None
    p: float = math.inf
    h_grid: int = 64
    x_grid: int = 2049

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError("The difference order k must be at least 1.")
        if self.r < 0:
            raise ParameterError("The power r must be nonnegative.")
        if self.h_grid < 8:
            raise ParameterError("At least 8 step samples are needed (got {}).".format(self.h_grid))
        if self.x_grid < 3:
            raise ParameterError("At least 3 x samples are needed.")
        if self.weight is not None and not in_Jp(self.weight.alpha, self.weight.beta, self.p):
            raise ParameterError("Weight exponents ({}, {}) are not in J_p for p = {}."
                                 .format(self.weight.alpha, self.weight.beta, self.p))
        elif not self.p > 0:
            raise ParameterError("The exponent p must be positive.")


class MeshPartition:

    """
    A partition -1 = x_0 < x_1 < ... < x_N = 1 of [-1, 1]; its mesh norm is the length of the largest interval.

    :param points: the partition points
    """

    def __init__(self, points: Sequence[float]):
        points = np.array(points, dtype=float)
        if points.ndim != 1 or len(points) < 2 or points[0] != -1 or points[-1] != 1 \
                or not np.all(np.diff(points) > 0):
            raise ParameterError("A mesh must increase strictly from -1 to 1.")
        points.flags.writeable = False
        self.points = points

    @classmethod
    def from_chebyshev_partition(cls, partition: ChebyshevPartition) -> MeshPartition:
        return cls(partition.knots)

    @property
    def N(self) -> int:
        return len(self.points) - 1

    @property
    def mesh_norm(self) -> float:
        return float(np.max(np.diff(self.points)))

    def designated_neighbors(self, j: int) -> tuple:
        """
        The designated neighbor points (x_{j-2}, x_{j+1}) of the partition point x_j, clamped to the ends of the
        mesh. Which j a computation uses is left to the caller.

        :param j: index of a partition point
        """
        if not 0 <= j <= self.N:
            raise ParameterError("Mesh index {} out of range 0..{}.".format(j, self.N))
        return float(self.points[max(j - 2, 0)]), float(self.points[min(j + 1, self.N)])

    def __repr__(self):
        return "MeshPartition({})".format(list(self.points))


def _step_values(t: float, h_grid: int) -> np.ndarray:
    steps = np.geomspace(t / 1000, t, h_grid)
    steps[-1] = t
    return steps


def _difference_factor(spec: ModulusSpec, x: np.ndarray) -> np.ndarray:
    factor = np.ones_like(x)
    if spec.weight is not None and not spec.weight.is_unit:
        factor = factor * weight_eval(spec.weight, x)
    if spec.r != 0:
        factor = factor * phi(x) ** spec.r
    return factor


def _difference_norm(f: Callable, spec: ModulusSpec, h: float) -> float:
    """|| w phi^r Delta_h^k f ||_p over the admissible set of x (the difference vanishes elsewhere)."""
    bounds = admissible_interval(h, spec.k, spec.step_mode)
    if bounds is None:
        return 0.0
    lo, hi = bounds

    def magnitude(x):
        return np.abs(_difference_factor(spec, x) * symmetric_difference(f, x, h, spec.k, spec.step_mode))

    if math.isinf(spec.p):
        if hi == lo:
            return float(magnitude(np.array([lo]))[0])
        xs = np.linspace(lo, hi, spec.x_grid)
        values = magnitude(xs)
        i = int(np.argmax(values))
        best = float(values[i])
        if best == 0:
            return 0.0
        result = minimize_scalar(lambda v: -float(magnitude(np.array([v]))[0]),
                                 bounds=(xs[max(i - 1, 0)], xs[min(i + 1, len(xs) - 1)]), method="bounded",
                                 options={"xatol": 1e-13})
        return max(best, -float(result.fun))

    if hi == lo:
        return 0.0
    # panels cluster towards the ends of the admissible set, where weights with negative exponents grow
    panels = max(1, spec.x_grid // _PANEL_ORDER)
    edges = chebyshev_points(panels + 1, lo, hi)
    rule = gauss_legendre_rule(_PANEL_ORDER)
    half = np.diff(edges) / 2
    nodes = (edges[:-1, None] + half[:, None] * (1 + rule.nodes[None, :])).ravel()
    weights = (half[:, None] * rule.weights[None, :]).ravel()
    return float(np.dot(weights, magnitude(nodes) ** spec.p)) ** (1 / spec.p)


def dt_modulus(f: Callable, spec: ModulusSpec, t: float) -> float:
    """
    The modulus of smoothness  sup_{0 < h <= t} || w phi^r Delta^k f ||_p  with the step mode, weight and exponent of
    the given ModulusSpec. The sup is taken over a geometric grid of spec.h_grid steps
    between t/1000 and t (t included), so the result is a lower bound; see :func:`h_grid_convergence`.

    :param f: the function (for r > 0 the caller passes the derivative f^(r))
    :param spec: modulus parameters
    :param t: positive step bound
    """
    if not t > 0:
        raise ParameterError("The step bound t must be positive (got {}).".format(t))
    return max(_difference_norm(f, spec, h) for h in _step_values(t, spec.h_grid))


def classical_modulus(f: Callable, k: int, delta: float, p: float = math.inf, h_grid: int = 64,
                      x_grid: int = 2049) -> float:
    """
    The classical k-th modulus of smoothness  sup_{0 < h <= delta} || Delta_h^k f ||_p  with constant step.

    :param f: the function on [-1, 1]
    :param k: difference order
    :param delta: positive step bound
    :param p: the exponent
    :param h_grid: number of sampled steps
    :param x_grid: number of x samples / quadrature nodes
    """
    return dt_modulus(f, ModulusSpec(k, 0.0, StepMode.CONSTANT, None, p, h_grid, x_grid), delta)


def weighted_dt_modulus(f_r: Callable, spec: ModulusSpec, mesh: MeshPartition) -> float:
    """
    The weighted modulus  sup_{0 < h <= ||theta_N||} || w phi^r Delta_{h phi}^i f^(r) ||_p  at the mesh norm of a
    partition, where i = spec.k. Requires ||theta_N|| < 2 / i.

    :param f_r: the r-th derivative of the function
    :param spec: modulus parameters; the weight must be set
    :param mesh: the partition whose mesh norm is the step bound
    """
    if spec.weight is None:
        raise ParameterError("The weighted modulus needs a Jacobi weight in its spec.")
    if mesh.mesh_norm >= 2 / spec.k:
        raise ParameterError("Mesh norm {:.6g} is not below 2/i = {:.6g}.".format(mesh.mesh_norm, 2 / spec.k))
    return dt_modulus(f_r, spec, mesh.mesh_norm)


def dt_modulus_curve(f: Callable, spec: ModulusSpec, ts: Sequence[float]) -> np.ndarray:
    """
    The modulus at several step bounds at once. All bounds share one pool of steps (the union of their grids), and
    the value at t is the sup over the pooled steps not exceeding t, so the curve is nondecreasing in t exactly.

    :param f: the function
    :param spec: modulus parameters
    :param ts: positive step bounds
    :return: array of modulus values, in the order of ts
    """
    ts = np.asarray(ts, dtype=float)
    if np.any(ts <= 0):
        raise ParameterError("Step bounds must be positive.")
    steps = np.unique(np.concatenate([_step_values(t, spec.h_grid) for t in ts]))
    norms = np.array([_difference_norm(f, spec, h) for h in steps])
    running = np.maximum.accumulate(norms)
    return running[np.searchsorted(steps, ts, side="right") - 1]


def h_grid_convergence(f: Callable, spec: ModulusSpec, t: float) -> tuple:
    """
    Checks the step-grid resolution of :func:`dt_modulus` by recomputing with twice as many steps.

    :return: tuple of (value, value with doubled h_grid, relative change)
    """
    value = dt_modulus(f, spec, t)
    doubled = dt_modulus(f, replace(spec, h_grid=2 * spec.h_grid), t)
    change = abs(doubled - value) / doubled if doubled > 0 else 0.0
    return value, doubled, change
