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
import numpy as np
from scipy.optimize import minimize_scalar
from ..utilities import ParameterError, EvaluationError, evaluate_function

#: cells whose share of the gap between the sums is at least this are resampled more densely
DOMINANT_CELL_SHARE = 0.25
#: total number of samples ls_integral spends per refinement level
SAMPLE_BUDGET = 2 ** 22


class Integrator:

    """
    A nondecreasing, nonnegative function applied to the measures of the cells of a partition. Monotonicity and
    nonnegativity are checked on construction on a uniform sample of [0, check_upper].

    :param fn: the function of a nonnegative real (vectorized or scalar)
    :param name: display name
    :param check_upper: right end of the range of measures the checks cover
    :param check_points: number of sample points of the checks
    """

    def __init__(self, fn: Callable, name: str = "integrator", check_upper: float = 10.0, check_points: int = 1000):
        mu = np.linspace(0.0, check_upper, check_points)
        values = evaluate_function(fn, mu, description="integrator")
        if np.any(np.diff(values) < -1e-14 * max(1.0, float(np.max(np.abs(values))))):
            raise ParameterError("Integrator {} is not nondecreasing on [0, {}].".format(name, check_upper))
        if values[0] < 0:
            raise ParameterError("Integrator {} takes negative values.".format(name))
        self.fn = fn
        self.name = name

    @classmethod
    def identity(cls) -> Integrator:
        return cls(lambda mu: mu, "identity")

    @classmethod
    def power(cls, exponent: float) -> Integrator:
        if exponent <= 0:
            raise ParameterError("Power integrators need a positive exponent.")
        return cls(lambda mu: np.power(mu, exponent), "mu^{}".format(exponent))

    def __call__(self, mu):
        return evaluate_function(self.fn, mu, description="integrator")

    def __repr__(self):
        return "Integrator({})".format(self.name)


class CellPartition:

    """
    A partition of [a, b] into consecutive cells [e_j, e_{j+1}] given by increasing edges; the measure of a cell is
    its length.

    :param edges: increasing cell edges e_0 = a < ... < e_n = b
    """

    def __init__(self, edges: Sequence[float]):
        edges = np.array(edges, dtype=float)
        if edges.ndim != 1 or len(edges) < 2 or not np.all(np.diff(edges) > 0):
            raise ParameterError("Cell edges must form a strictly increasing sequence of at least two points.")
        edges.flags.writeable = False
        self.edges = edges

    @classmethod
    def uniform(cls, a: float, b: float, cells: int) -> CellPartition:
        return cls(np.linspace(a, b, cells + 1))

    @property
    def domain(self) -> tuple:
        return float(self.edges[0]), float(self.edges[-1])

    @property
    def measures(self) -> np.ndarray:
        return np.diff(self.edges)

    def __len__(self):
        return len(self.edges) - 1

    def refined(self) -> CellPartition:
        """Splits every cell in half."""
        midpoints = (self.edges[:-1] + self.edges[1:]) / 2
        return CellPartition(np.sort(np.concatenate([self.edges, midpoints])))

    def with_points(self, points: Sequence[float]) -> CellPartition:
        """The refinement obtained by adding the given points (those inside the domain) as edges."""
        a, b = self.domain
        extra = [x for x in points if a < x < b]
        return CellPartition(np.unique(np.concatenate([self.edges, extra])))

    def __repr__(self):
        return "CellPartition({} cells on [{}, {}])".format(len(self), *self.domain)


@dataclass(frozen=True)
class LSSumPair:

    lower: float
    upper: float

    @property
    def gap(self) -> float:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2


def _cell_bounds(f: Callable, lo: np.ndarray, hi: np.ndarray, samples: int) -> tuple:
    t = np.linspace(0.0, 1.0, samples)
    points = lo[:, None] + (hi - lo)[:, None] * t[None, :]
    values = evaluate_function(f, points, require_finite=False)
    if not np.all(np.isfinite(values)):
        raise EvaluationError("The function is unbounded (non-finite sample) on the integration domain.")
    return values.min(axis=1), values.max(axis=1)


def _refine_cell(f: Callable, lo: float, hi: float, samples: int) -> tuple:
    t = np.linspace(lo, hi, samples)
    values = evaluate_function(f, t, require_finite=False)
    if not np.all(np.isfinite(values)):
        raise EvaluationError("The function is unbounded (non-finite sample) on the integration domain.")
    low, high = float(values.min()), float(values.max())
    for sign, index in ((1, int(np.argmin(values))), (-1, int(np.argmax(values)))):
        bracket = (t[max(index - 1, 0)], t[min(index + 1, samples - 1)])
        if bracket[0] < bracket[1]:
            result = minimize_scalar(lambda x: sign * float(evaluate_function(f, x)), bounds=bracket,
                                     method="bounded")
            if sign > 0:
                low = min(low, float(result.fun))
            else:
                high = max(high, -float(result.fun))
    return low, high


def ls_sums(f: Callable, P: CellPartition, integrators: Sequence[Integrator], samples_per_cell: int = 256) \
        -> LSSumPair:
    """
    Lower and upper Lebesgue-Stieltjes sums  sum_j m_j prod_i L_i(mu(D_j))  and  sum_j M_j prod_i L_i(mu(D_j)),
    where m_j and M_j are the inf and sup of f over the j-th cell. The inf and sup are estimated from samples that
    include the cell ends; cells that dominate the gap between the sums are resampled four times as densely and
    polished with a bounded scalar search around the sampled extremes.

    :param f: a bounded function on the partition's domain
    :param P: the cell partition
    :param integrators: finitely many integrators (at least one)
    :param samples_per_cell: samples per cell, at least 2
    """
    if len(integrators) == 0:
        raise ParameterError("At least one integrator is required.")
    if samples_per_cell < 2:
        raise ParameterError("At least two samples per cell are required.")
    measures = P.measures
    factors = np.ones_like(measures)
    for integrator in integrators:
        factors = factors * integrator(measures)

    lo, hi = P.edges[:-1], P.edges[1:]
    low, high = _cell_bounds(f, lo, hi, samples_per_cell)
    contributions = (high - low) * factors
    total_gap = float(np.sum(contributions))
    if total_gap > 0:
        for j in np.flatnonzero(contributions >= DOMINANT_CELL_SHARE * total_gap):
            low[j], high[j] = _refine_cell(f, lo[j], hi[j], 4 * samples_per_cell)
    return LSSumPair(float(np.dot(low, factors)), float(np.dot(high, factors)))


@dataclass(frozen=True)
class LSIntegralResult:

    """
    Outcome of :func:`ls_integral`: either a value (the midpoint of the final sums) or a NOT-INTEGRABLE verdict at the
    resolution reached within the cell budget.
    """

    integrable: bool
    value: float | None
    sums: LSSumPair
    cells: int

    @property
    def verdict(self) -> str:
        return "INTEGRABLE" if self.integrable else "NOT-INTEGRABLE"


def ls_integral(f: Callable, integrators: Sequence[Integrator], tol: float = 1e-6, max_cells: int = 2 ** 20,
                domain: Sequence[float] = (0.0, 1.0)) -> LSIntegralResult:
    """
    Lebesgue-Stieltjes integral by dyadic refinement of a uniform partition of the domain, stopping as soon as the
    upper and lower sums are within tol of each other. Running out of cells is a verdict, not an error.

    :param f: a bounded function on the domain
    :param integrators: finitely many integrators
    :param tol: target gap between the sums
    :param max_cells: cell budget
    :param domain: the interval [a, b]
    """
    if not tol > 0:
        raise ParameterError("The tolerance must be positive.")
    a, b = domain
    cells = 1
    while True:
        samples = int(max(3, min(256, SAMPLE_BUDGET // cells)))
        sums = ls_sums(f, CellPartition.uniform(a, b, cells), integrators, samples)
        if sums.gap <= tol:
            return LSIntegralResult(True, sums.midpoint, sums, cells)
        if 2 * cells > max_cells:
            logging.warning("Lebesgue-Stieltjes sums still {:.3g} apart after {} cells; reporting NOT-INTEGRABLE."
                            .format(sums.gap, cells))
            return LSIntegralResult(False, None, sums, cells)
        cells *= 2
