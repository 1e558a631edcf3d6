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
Module containing the discrete optimization kernels shared by the polynomial and spline solvers. Each kernel
minimizes a discretized weighted norm of (basis @ c - target) over the coefficient vector c, optionally subject to
homogeneous linear inequalities G c >= 0 (the sampled shape constraints):

- p = inf: a minimax linear program (variables c and the level t);
- p = 1: a linear program with split auxiliary variables for the absolute residuals;
- p = 2: least squares, or least squares with inequality constraints reduced to a least-distance program that is
  solved by nonnegative least squares;
- any other p >= 1: iteratively reweighted least squares, constrained in every step when G is given.
"""

from __future__ import annotations
from dataclasses import dataclass
import logging
import math
import numpy as np
from scipy.linalg import qr, solve_triangular
from scipy.optimize import linprog, nnls
from ..utilities import ParameterError, SolverError

#: relative diagonal regularization of the least-squares problems
RIDGE = 1e-12
#: iteration cap of the reweighted least-squares solver
MAX_IRLS_ITERATIONS = 500
#: feasibility / optimality tolerances handed to the HiGHS linear programming backend
LP_OPTIONS = {"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10}


@dataclass(frozen=True)
class DiscreteProblem:

    """
    A discretized approximation problem: minimize the discrete norm of basis @ c - target, where for finite p the
    norm is (sum weights |r|^p)^{1/p} and for p = inf it is max weights |r|.

    :param basis: matrix whose columns are the basis functions sampled at the discretization points
    :param target: the target sampled at the same points
    :param weights: quadrature weights (finite p) or weight values (p = inf), nonnegative
    :param p: the exponent, at least 1
    :param constraints: optional matrix G; the solution satisfies G c >= 0
    """

    basis: np.ndarray
    target: np.ndarray
    weights: np.ndarray
    p: float
    constraints: np.ndarray | None = None

    def __post_init__(self):
        if self.p < 1:
            raise ParameterError("The discrete kernels need p >= 1 (got {}).".format(self.p))
        if self.basis.shape[0] != len(self.target) or len(self.target) != len(self.weights):
            raise ParameterError("Basis, target and weights disagree in the number of points.")

    @property
    def dimension(self) -> int:
        return self.basis.shape[1]

    def objective(self, coeffs: np.ndarray) -> float:
        residual = np.abs(self.basis @ coeffs - self.target)
        if math.isinf(self.p):
            return float(np.max(self.weights * residual))
        return float(np.dot(self.weights, residual ** self.p)) ** (1 / self.p)


@dataclass(frozen=True)
class KernelResult:

    coeffs: np.ndarray
    iterations: int
    converged: bool


def _normalized_rows(G: np.ndarray) -> np.ndarray:
    scale = np.max(np.abs(G), axis=1)
    scale[scale == 0] = 1.0
    return G / scale[:, None]


def _ridge_rows(A: np.ndarray) -> np.ndarray:
    column_scale = max(float(np.max(np.linalg.norm(A, axis=0))), 1.0)
    return math.sqrt(RIDGE) * column_scale * np.eye(A.shape[1])


# --------------------------------------- Least squares ------------------------------------------

def least_squares(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Minimizes ||A c - b||_2 with a tiny ridge term that selects the minimal-norm solution among near-optimal ones.

    :param A: the (already weighted) design matrix
    :param b: the (already weighted) right-hand side
    """
    stacked = np.vstack([A, _ridge_rows(A)])
    rhs = np.concatenate([b, np.zeros(A.shape[1])])
    return np.linalg.lstsq(stacked, rhs, rcond=None)[0]


def least_distance(E: np.ndarray, f: np.ndarray) -> np.ndarray:
    """
    Least-distance programming: the z of minimal 2-norm with E z >= f, obtained from the nonnegative least-squares
    problem  min ||[E^T; f^T] u - e_{m+1}||, u >= 0  (Lawson & Hanson's reduction).

    :param E: constraint matrix (one row per constraint)
    :param f: constraint right-hand side
    :raises SolverError: when the constraints are infeasible
    """
    m = E.shape[1]
    M = np.vstack([E.T, f[None, :]])
    d = np.zeros(m + 1)
    d[-1] = 1.0
    u, _ = nnls(M, d, maxiter=50 * M.shape[1])
    r = M @ u - d
    if abs(r[-1]) < 1e-14:
        raise SolverError("Least-distance program is infeasible.")
    return -r[:m] / r[-1]


def constrained_least_squares(A: np.ndarray, b: np.ndarray, G: np.ndarray | None = None) -> np.ndarray:
    """
    Minimizes ||A c - b||_2 subject to G c >= 0. With a QR factorization A = QR the substitution z = R c - Q^T b turns
    the problem into a least-distance program in z, which :func:`least_distance` solves exactly (active set).

    :param A: the (already weighted) design matrix
    :param b: the (already weighted) right-hand side
    :param G: optional constraint matrix
    """
    if G is None or len(G) == 0:
        return least_squares(A, b)
    G = _normalized_rows(G)
    stacked = np.vstack([A, _ridge_rows(A)])
    rhs = np.concatenate([b, np.zeros(A.shape[1])])
    Q, R = qr(stacked, mode="economic")
    projected = Q.T @ rhs
    # E = G R^{-1}, computed as the solution of R^T E^T = G^T
    E = solve_triangular(R, G.T, trans="T").T
    z = least_distance(E, -E @ projected)
    return solve_triangular(R, z + projected)


# ---------------------------------------- Linear programs ---------------------------------------

def _run_linprog(objective, A_ub, b_ub, bounds, description):
    result = linprog(objective, A_ub=A_ub, b_ub=b_ub, bounds=bounds, method="highs", options=LP_OPTIONS)
    if result.x is None:
        raise SolverError("The {} linear program failed: {}".format(description, result.message))
    if result.status != 0:
        logging.warning("The {} linear program ended with status {}: {}".format(description, result.status,
                                                                              result.message))
    return result


def minimax_lp(A: np.ndarray, b: np.ndarray, G: np.ndarray | None = None) -> KernelResult:
    """
    Discrete minimax approximation: minimize t subject to -t <= (A c - b)_i <= t for every row, and G c >= 0.

    :param A: the design matrix with each row multiplied by the weight at its point
    :param b: the target multiplied by the weights
    :param G: optional constraint matrix
    """
    rows, n = A.shape
    ones = np.ones((rows, 1))
    A_ub = [np.hstack([A, -ones]), np.hstack([-A, -ones])]
    b_ub = [b, -b]
    if G is not None and len(G):
        A_ub.append(np.hstack([-_normalized_rows(G), np.zeros((len(G), 1))]))
        b_ub.append(np.zeros(len(G)))
    objective = np.zeros(n + 1)
    objective[-1] = 1.0
    result = _run_linprog(objective, np.vstack(A_ub), np.concatenate(b_ub), [(None, None)] * (n + 1), "minimax")
    return KernelResult(np.asarray(result.x[:n]), int(getattr(result, "nit", 0) or 0), result.status == 0)


def l1_lp(A: np.ndarray, b: np.ndarray, G: np.ndarray | None = None) -> KernelResult:
    """
    Discrete L1 approximation: minimize sum e_i subject to -e <= A c - b <= e, e >= 0, and G c >= 0.

    :param A: the design matrix with each row multiplied by its quadrature weight
    :param b: the target multiplied by the quadrature weights
    :param G: optional constraint matrix
    """
    rows, n = A.shape
    identity = np.eye(rows)
    A_ub = [np.hstack([A, -identity]), np.hstack([-A, -identity])]
    b_ub = [b, -b]
    if G is not None and len(G):
        A_ub.append(np.hstack([-_normalized_rows(G), np.zeros((len(G), rows))]))
        b_ub.append(np.zeros(len(G)))
    objective = np.concatenate([np.zeros(n), np.ones(rows)])
    bounds = [(None, None)] * n + [(0, None)] * rows
    result = _run_linprog(objective, np.vstack(A_ub), np.concatenate(b_ub), bounds, "L1")
    return KernelResult(np.asarray(result.x[:n]), int(getattr(result, "nit", 0) or 0), result.status == 0)


# --------------------------------- Iteratively reweighted LS ------------------------------------

def irls(problem: DiscreteProblem, tol: float = 1e-8, max_iterations: int = MAX_IRLS_ITERATIONS) -> KernelResult:
    """
    Iteratively reweighted least squares for  min sum w_i |(B c - f)_i|^p,  1 < p < inf. Each step solves a weighted
    least-squares problem with weights w_i max(|r_i|, eps)^{p-2} (subject to the constraints, if any). For p > 2 the
    steps are damped by 1/(p - 1). The best iterate is kept; stopping after max_iterations without the relative
    objective change dropping below tol is reported as not converged.

    :param problem: the discrete problem
    :param tol: relative tolerance on the change of the objective
    :param max_iterations: iteration cap
    """
    B, f, w, p = problem.basis, problem.target, problem.weights, problem.p
    G = problem.constraints
    root_w = np.sqrt(w)
    coeffs = constrained_least_squares(root_w[:, None] * B, root_w * f, G)
    best, best_value = coeffs, problem.objective(coeffs)
    guard = 1e-10 * (1.0 + float(np.max(np.abs(f))))
    damping = 1.0 / (p - 1) if p > 2 else 1.0
    previous = best_value
    for iteration in range(1, max_iterations + 1):
        residual = np.abs(B @ coeffs - f)
        step_weights = np.sqrt(w * np.maximum(residual, guard) ** (p - 2))
        proposal = constrained_least_squares(step_weights[:, None] * B, step_weights * f, G)
        coeffs = coeffs + damping * (proposal - coeffs)
        value = problem.objective(coeffs)
        if value < best_value:
            best, best_value = coeffs, value
        if abs(previous - value) <= tol * max(value, 1e-300):
            return KernelResult(best, iteration, True)
        previous = value
    logging.warning("Reweighted least squares for p = {} did not converge in {} iterations (objective {:.6g})."
                    .format(p, max_iterations, best_value))
    return KernelResult(best, max_iterations, False)


def solve_discrete(problem: DiscreteProblem, tol: float = 1e-8) -> KernelResult:
    """
    Solves a discrete problem with the kernel that fits its exponent.

    :param problem: the discrete problem
    :param tol: tolerance for the iterative kernel
    """
    B, f, w, G = problem.basis, problem.target, problem.weights, problem.constraints
    if problem.dimension > len(f):
        raise ParameterError("{} coefficients cannot be determined from {} discretization points."
                             .format(problem.dimension, len(f)))
    if math.isinf(problem.p):
        return minimax_lp(w[:, None] * B, w * f, G)
    if problem.p == 1:
        return l1_lp(w[:, None] * B, w * f, G)
    if problem.p == 2:
        root_w = np.sqrt(w)
        return KernelResult(constrained_least_squares(root_w[:, None] * B, root_w * f, G), 1, True)
    return irls(problem, tol)
