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
Module containing best approximation by piecewise polynomials of order k (degree k - 1) on a knot sequence, with C0
or C1 continuity and optional convexity / coconvexity constraints. Each piece is expanded in the Chebyshev basis of its
own interval; the continuity conditions are linear equalities between neighbouring pieces that are eliminated through
a null-space basis, so the same kernels as for polynomials apply.
"""

from __future__ import annotations
from typing import Callable, Sequence
import logging
import math
import numpy as np
from numpy.polynomial import chebyshev as cheb
from scipy.linalg import null_space
from expenvelope.envelope import SavesToJSON
from ..polynomials import ChebyshevPartition, PiecewisePolynomial
from ..shape import InflectionPartition, extrema_on
from ..utilities import ParameterError, chebyshev_points, evaluate_function
from ..weighted_spaces import WeightedNormParams, discretize_norm, weighted_lp_norm
from .best import second_derivative_matrix, CERTIFICATION_TOLERANCE, MAX_CERTIFICATION_ROUNDS
from .kernels import DiscreteProblem, solve_discrete
from .problems import ShapeConstraint, SolveStatus, MIN_CONSTRAINT_POINTS, SOLVER_TOLERANCE


class SplineSolution(SavesToJSON):

    """
    Result of :func:`best_spline`.

    :param spline: the best piecewise polynomial found
    :param error: weighted norm of f - spline
    :param discretization_error_estimate: change of the error under a doubled quadrature order (finite p) or the
        refinement gain of the sup (p = inf)
    :param constraint_residual: exact signed minima of s'' per piece and segment, followed by the signed slope jumps
        at the knots (C0 only); empty without shape constraint
    :param iterations: solver iterations
    :param status: how far the result can be trusted
    """

    def __init__(self, spline: PiecewisePolynomial, error: float, discretization_error_estimate: float = 0.0,
                 constraint_residual: Sequence[float] = (), iterations: int = 1,
                 status: SolveStatus = SolveStatus.OPTIMAL):
        self.spline = spline
        self.error = float(error)
        self.discretization_error_estimate = float(discretization_error_estimate)
        self.constraint_residual = tuple(float(r) for r in constraint_residual)
        self.iterations = int(iterations)
        self.status = status

    def _to_dict(self):
        return {
            "spline": self.spline._to_dict(),
            "error": self.error,
            "discretization_error_estimate": self.discretization_error_estimate,
            "constraint_residual": list(self.constraint_residual),
            "iterations": self.iterations,
            "status": self.status.value
        }

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(PiecewisePolynomial._from_dict(json_dict["spline"]), json_dict["error"],
                   json_dict.get("discretization_error_estimate", 0.0), json_dict.get("constraint_residual", ()),
                   json_dict.get("iterations", 1), SolveStatus(json_dict.get("status", "ok")))

    def __repr__(self):
        return "SplineSolution(error={:.6g}, status={}, pieces={})".format(self.error, self.status.value,
                                                                          self.spline.interval_count)


# ---------------------------------------- Linear algebra ----------------------------------------

def _local_variable(knots: np.ndarray, j: int, x):
    lo, hi = knots[j], knots[j + 1]
    return (2 * np.asarray(x, dtype=float) - lo - hi) / (hi - lo)


def spline_basis_matrix(knots: np.ndarray, k: int, x) -> np.ndarray:
    """
    Values of the local Chebyshev basis at the points x: column j k + m is T_m in the local variable of the j-th
    interval, and vanishes outside that interval.

    :param knots: increasing knots
    :param k: order (pieces have degree k - 1)
    :param x: points of [knots[0], knots[-1]]
    """
    x = np.asarray(x, dtype=float)
    pieces = len(knots) - 1
    indices = np.clip(np.searchsorted(knots, x, side="right") - 1, 0, pieces - 1)
    out = np.zeros((len(x), pieces * k))
    for j in np.unique(indices):
        rows = np.flatnonzero(indices == j)
        out[np.ix_(rows, np.arange(j * k, (j + 1) * k))] = cheb.chebvander(_local_variable(knots, j, x[rows]), k - 1)
    return out


def _end_values(k: int) -> tuple:
    m = np.arange(k)
    # T_m(1) = 1, T_m(-1) = (-1)^m, T_m'(1) = m^2, T_m'(-1) = (-1)^(m+1) m^2
    return np.ones(k), (-1.0) ** m, m ** 2.0, (-1.0) ** (m + 1) * m ** 2.0


def continuity_matrix(knots: np.ndarray, k: int, continuity: str) -> np.ndarray:
    """
    Rows expressing value matching (C0) and, for C1, first-derivative matching at every interior knot.

    :param knots: increasing knots
    :param k: order
    :param continuity: "C0" or "C1"
    """
    pieces = len(knots) - 1
    right_value, left_value, right_slope, left_slope = _end_values(k)
    lengths = np.diff(knots)
    rows = []
    for j in range(1, pieces):
        left_block, right_block = slice((j - 1) * k, j * k), slice(j * k, (j + 1) * k)
        row = np.zeros(pieces * k)
        row[left_block], row[right_block] = right_value, -left_value
        rows.append(row)
        if continuity == "C1":
            row = np.zeros(pieces * k)
            row[left_block] = right_slope * 2 / lengths[j - 1]
            row[right_block] = -left_slope * 2 / lengths[j]
            rows.append(row)
    return np.array(rows).reshape(-1, pieces * k)


def _slope_jump_row(knots: np.ndarray, k: int, j: int) -> np.ndarray:
    """Row computing s'(x_j+) - s'(x_j-) at the interior knot x_j."""
    _, _, right_slope, left_slope = _end_values(k)
    lengths = np.diff(knots)
    row = np.zeros((len(knots) - 1) * k)
    row[(j - 1) * k:j * k] = -right_slope * 2 / lengths[j - 1]
    row[j * k:(j + 1) * k] = left_slope * 2 / lengths[j]
    return row


def _knots_off_inflections(knots: np.ndarray, Y: InflectionPartition) -> list:
    # a kink exactly at an inflection point is compatible with either adjacent shape
    return [j for j in range(1, len(knots) - 1) if all(abs(knots[j] - y) > 1e-12 for y in Y.points)]


def spline_constraint_matrix(knots: np.ndarray, k: int, continuity: str, Y: InflectionPartition,
                             points_per_piece: int) -> np.ndarray:
    """
    Sampled shape conditions sign * s'' >= 0 on every piece (sampled separately on each part of the piece lying in
    one segment of Y), plus sign * (slope jump) >= 0 at the knots of a C0 spline.

    :param knots: increasing knots
    :param k: order
    :param continuity: "C0" or "C1"
    :param Y: inflection partition (empty for convexity)
    :param points_per_piece: sample points per piece and segment
    """
    pieces = len(knots) - 1
    rows = []
    if k >= 3:
        for j in range(pieces):
            for segment in Y.segments():
                lo, hi = max(segment.lo, knots[j]), min(segment.hi, knots[j + 1])
                if hi <= lo:
                    continue
                t = _local_variable(knots, j, chebyshev_points(points_per_piece, lo, hi))
                block = np.zeros((len(t), pieces * k))
                block[:, j * k:(j + 1) * k] = segment.sign * second_derivative_matrix(t, k)
                rows.append(block)
    if continuity == "C0" and k >= 2:
        for j in _knots_off_inflections(knots, Y):
            rows.append(int(Y.sign_function(knots[j])) * _slope_jump_row(knots, k, j)[None, :])
    return np.vstack(rows) if rows else np.zeros((0, pieces * k))


def spline_shape_residuals(spline: PiecewisePolynomial, Y: InflectionPartition, include_jumps: bool) -> list:
    """
    Exact shape residuals of a piecewise polynomial: for every piece and every segment of Y it overlaps, the minimum
    of sign * s'' (found from the roots of s'''), and, if include_jumps, sign * (slope jump) at the interior knots.

    :return: list of (residual, scale) pairs
    """
    out = []
    for piece in spline.pieces:
        second = piece.derivative(2)
        a, b = piece.domain
        for segment in Y.segments():
            lo, hi = max(segment.lo, a), min(segment.hi, b)
            if hi <= lo:
                continue
            low, high = extrema_on(second, lo, hi)
            out.append((low if segment.sign > 0 else -high, max(1.0, abs(low), abs(high))))
    if include_jumps:
        jumps = spline.knot_jumps(1)
        for j in _knots_off_inflections(spline.knots, Y):
            slope = spline.pieces[j].derivative()(spline.knots[j])
            out.append((int(Y.sign_function(spline.knots[j])) * jumps[j - 1], max(1.0, abs(slope))))
    return out


# -------------------------------------------- Solver --------------------------------------------

def best_spline(f: Callable, partition, k: int, continuity: str = "C0",
                constraint: ShapeConstraint | None = None, norm: WeightedNormParams | None = None,
                constraint_grid: int | None = None, solver_tol: float = SOLVER_TOLERANCE) -> SplineSolution:
    """
    Best approximation of f by piecewise polynomials of order k on the partition (the spaces Sigma_{k,n} for C0 and
    Sigma^1_{k,n} for C1), in a weighted norm on [-1, 1], optionally convex or coconvex. Shape constraints are
    sampled and certified exactly, doubling the samples up to three times before reporting UNCERTIFIED.

    :param f: the function on [-1, 1]
    :param partition: a :class:`~coconvex_approx.polynomials.ChebyshevPartition` or increasing knots from -1 to 1
    :param k: order, at least 1
    :param continuity: "C0" or "C1"
    :param constraint: shape constraint (default none)
    :param norm: weighted norm with p >= 1 on [-1, 1]
    :param constraint_grid: sample points per piece and segment (default max(4 k, 64))
    :param solver_tol: tolerance of the iterative kernel
    """
    constraint = ShapeConstraint.none() if constraint is None else constraint
    norm = WeightedNormParams() if norm is None else norm
    if k < 1:
        raise ParameterError("The spline order k must be at least 1.")
    if continuity not in ("C0", "C1"):
        raise ParameterError("Continuity must be C0 or C1 (got {}).".format(continuity))
    if norm.p < 1:
        raise ParameterError("Best approximation is only supported for p >= 1 (got p = {}).".format(norm.p))
    if not norm.interval.is_reference:
        raise ParameterError("Splines are fitted on [-1, 1] only.")
    knots = partition.knots if isinstance(partition, ChebyshevPartition) else np.asarray(partition, dtype=float)
    if knots[0] != -1 or knots[-1] != 1 or not np.all(np.diff(knots) > 0):
        raise ParameterError("Spline knots must increase from -1 to 1.")

    equalities = continuity_matrix(knots, k, continuity)
    Z = null_space(equalities) if len(equalities) else np.eye((len(knots) - 1) * k)
    edges = None if math.isinf(norm.p) else knots
    disc = discretize_norm(norm, edges=edges)
    values = evaluate_function(f, disc.x, description="target")
    basis = spline_basis_matrix(knots, k, disc.points) @ Z

    def assemble(z):
        rows = (Z @ z).reshape(len(knots) - 1, k)
        return PiecewisePolynomial.from_local_coefficients(knots, rows, continuity)

    Y = constraint.inflections
    points = constraint_grid or max(4 * k, MIN_CONSTRAINT_POINTS)
    iterations = 0
    status = SolveStatus.OPTIMAL
    residuals = []
    for round_number in range(1, MAX_CERTIFICATION_ROUNDS + 1):
        G = None
        if constraint.is_shape_constrained:
            G = spline_constraint_matrix(knots, k, continuity, Y, points) @ Z
            G = G if len(G) else None
        result = solve_discrete(DiscreteProblem(basis, values, disc.weights, norm.p, G), solver_tol)
        iterations += result.iterations
        status = SolveStatus.OPTIMAL if result.converged else SolveStatus.DEGRADED
        spline = assemble(result.coeffs)
        if not constraint.is_shape_constrained:
            break
        residuals = spline_shape_residuals(spline, Y, continuity == "C0")
        if all(r >= -CERTIFICATION_TOLERANCE * scale for r, scale in residuals):
            break
        points *= 2
    else:
        logging.warning("Spline shape certification failed after {} rounds (worst residual {:.3g}); reporting "
                        "UNCERTIFIED.".format(MAX_CERTIFICATION_ROUNDS, min(r for r, _ in residuals)))
        status = SolveStatus.UNCERTIFIED

    def residual_function(x):
        return evaluate_function(f, x, description="target") - spline(x)

    if math.isinf(norm.p):
        error = weighted_lp_norm(residual_function, norm)
        estimate = abs(error - disc.norm_of(values - spline(disc.x)))
    else:
        finer = discretize_norm(norm, refinement=2, edges=knots)
        error = finer.norm_of(residual_function(finer.x))
        estimate = abs(error - disc.norm_of(values - spline(disc.x)))
    return SplineSolution(spline, error, estimate, [r for r, _ in residuals], iterations, status)
