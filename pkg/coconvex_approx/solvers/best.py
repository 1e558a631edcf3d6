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
Module containing the best polynomial approximation solvers: :func:`best_unconstrained`, :func:`best_convex` and
:func:`best_coconvex` compute the degrees of best unconstrained, convex and coconvex approximation of a function in a
weighted L_p norm. Shape constraints are imposed as sampled sign conditions on p''; every constrained result is then
certified with the exact shape check, refining the sample grid (and finally lifting the polynomial along a
shape-preserving direction) when the certificate fails.
"""

from __future__ import annotations
from typing import Sequence
import logging
import math
import numpy as np
from numpy.polynomial import chebyshev as cheb
from ..polynomials import ChebyshevPolynomial
from ..shape import InflectionPartition, coconvexity_residuals
from ..utilities import ParameterError, chebyshev_points, evaluate_function
from ..weighted_spaces import WeightedNormParams, discretize_norm, weighted_lp_norm, NormDiscretization
from .kernels import DiscreteProblem, KernelResult, solve_discrete
from .problems import ApproxProblem, ApproxSolution, ShapeConstraint, ShapeKind, SolveStatus, SOLVER_TOLERANCE

#: a constrained solution is certified when every segment residual is at least -CERTIFICATION_TOLERANCE * scale
CERTIFICATION_TOLERANCE = 1e-8
#: number of solves with doubled constraint grids before lifting
MAX_CERTIFICATION_ROUNDS = 3
#: maximum number of lifting steps
MAX_LIFT_STEPS = 8
#: sample points per segment used to size a lifting step
LIFT_SAMPLES = 4097
#: maximum number of Remez exchange iterations of the minimax polish
MAX_REMEZ_ITERATIONS = 30


# ---------------------------------------- Building blocks ---------------------------------------

def second_derivative_matrix(points, n: int) -> np.ndarray:
    """
    Matrix whose (i, j) entry is T_j''(points_i), j = 0..n-1, with derivatives in the reference variable.

    :param points: points of [-1, 1]
    :param n: number of basis polynomials
    """
    points = np.asarray(points, dtype=float)
    if n < 3:
        return np.zeros((len(points), n))
    derivative_coeffs = np.zeros((n - 2, n))
    for j in range(2, n):
        unit = np.zeros(j + 1)
        unit[j] = 1.0
        second = cheb.chebder(unit, 2)
        derivative_coeffs[:len(second), j] = second
    return cheb.chebvander(points, n - 3) @ derivative_coeffs


def constraint_matrix(Y: InflectionPartition, n: int, points_per_segment: int) -> np.ndarray:
    """
    Rows sign_i T''(xi) for Chebyshev points xi of each segment (ends included), so that G c >= 0 states the sampled
    coconvexity conditions (plain convexity when Y is empty).

    :param Y: the inflection partition
    :param n: number of coefficients
    :param points_per_segment: sample points per segment
    """
    rows = [segment.sign * second_derivative_matrix(chebyshev_points(points_per_segment, segment.lo, segment.hi), n)
            for segment in Y.segments()]
    return np.vstack(rows)


def _target_values(prob: ApproxProblem, disc: NormDiscretization) -> np.ndarray:
    return evaluate_function(prob.target, disc.x, description="target")


def _discrete_problem(prob: ApproxProblem, disc: NormDiscretization, values: np.ndarray, n: int,
                      G: np.ndarray | None = None) -> DiscreteProblem:
    if n > len(disc):
        raise ParameterError("n = {} exceeds the {} points of the norm discretization.".format(n, len(disc)))
    return DiscreteProblem(cheb.chebvander(disc.points, n - 1), values, disc.weights, prob.p, G)


def _as_polynomial(prob: ApproxProblem, coeffs: np.ndarray) -> ChebyshevPolynomial:
    padded = np.zeros(prob.n)
    padded[:len(coeffs)] = coeffs
    return ChebyshevPolynomial(padded, prob.norm.interval)


def _reported_error(prob: ApproxProblem, poly: ChebyshevPolynomial) -> float:
    return weighted_lp_norm(lambda x: evaluate_function(prob.target, x, description="target") - poly(x), prob.norm)


def _discretization_estimate(prob: ApproxProblem, poly: ChebyshevPolynomial, disc: NormDiscretization,
                             values: np.ndarray) -> float:
    coarse = disc.norm_of(values - poly(disc.x))
    finer = discretize_norm(prob.norm, refinement=2)
    return abs(finer.norm_of(_target_values(prob, finer) - poly(finer.x)) - coarse)


def _is_certified(residuals: Sequence[tuple]) -> bool:
    return all(residual >= -CERTIFICATION_TOLERANCE * scale for residual, scale in residuals)


# ------------------------------------------- Lifting --------------------------------------------

def _lift_direction(Y: InflectionPartition, n: int) -> np.ndarray | None:
    """Coefficients of q with q'' = g, where g = +-(u - y_1)...(u - y_s) carries the segment signs."""
    g = Y.sign_polynomial().coeffs
    q = cheb.chebint(g, 2)
    if len(q) > n:
        return None
    out = np.zeros(n)
    out[:len(q)] = q
    return out


def lift_to_shape(poly: ChebyshevPolynomial, Y: InflectionPartition) -> tuple:
    """
    Removes small shape violations left by the sampled constraints by adding eps q, where q'' = g is nonnegative
    exactly where the second derivative must be: sign_i (p + eps q)'' = sign_i p'' + eps |g|. The step eps is sized
    from the worst ratio of violation to |g| on dense segment samples and repeated until the exact check passes.

    :param poly: the polynomial (its coefficients are taken in the reference variable)
    :param Y: the inflection partition
    :return: tuple of (polynomial, certified)
    """
    n = len(poly.coeffs)
    direction = _lift_direction(Y, n)
    if direction is None:
        return poly, False
    g = Y.sign_polynomial()
    samples = np.concatenate([chebyshev_points(LIFT_SAMPLES, seg.lo, seg.hi)[1:-1] for seg in Y.segments()])
    signs = Y.sign_function(samples)
    gap = np.abs(g(samples))
    coeffs = np.array(poly.coeffs)
    for step in range(MAX_LIFT_STEPS):
        candidate = ChebyshevPolynomial(coeffs, poly.affine_map)
        if _is_certified(coconvexity_residuals(candidate, Y)):
            return candidate, True
        second = cheb.chebval(samples, cheb.chebder(coeffs, 2)) if n >= 3 else np.zeros_like(samples)
        scale = max(poly.affine_map.half_width ** 2, float(np.max(np.abs(second))))
        # violations the certificate tolerates anyway are left alone
        violation = -signs * second - CERTIFICATION_TOLERANCE * scale / 2
        ratio = float(np.max(violation / np.maximum(gap, 1e-300)))
        eps = 1.01 * max(ratio, 0.0) + 2 ** step * CERTIFICATION_TOLERANCE * scale / float(np.max(gap))
        logging.debug("Lifting step {}: eps = {:.3g}".format(step + 1, eps))
        coeffs = coeffs + eps * direction
    final = ChebyshevPolynomial(coeffs, poly.affine_map)
    return final, _is_certified(coconvexity_residuals(final, Y))


# ---------------------------------------- Remez polish ------------------------------------------

def _alternating_extrema(error: np.ndarray, count: int) -> np.ndarray | None:
    signs = np.sign(error)
    for i in range(1, len(signs)):
        if signs[i] == 0:
            signs[i] = signs[i - 1]
    boundaries = np.flatnonzero(np.diff(signs) != 0) + 1
    runs = np.split(np.arange(len(error)), boundaries)
    extrema = [int(run[np.argmax(np.abs(error[run]))]) for run in runs if len(run)]
    while len(extrema) > count:
        magnitudes = np.abs(error[extrema])
        smallest = int(np.argmin(magnitudes))
        if len(extrema) - count == 1 or smallest in (0, len(extrema) - 1):
            extrema.pop(0 if magnitudes[0] < magnitudes[-1] else -1)
        else:
            neighbor = smallest - 1 if magnitudes[smallest - 1] < magnitudes[smallest + 1] else smallest + 1
            for index in sorted((smallest, neighbor), reverse=True):
                extrema.pop(index)
    return np.array(extrema) if len(extrema) == count else None


def remez_polish(prob: ApproxProblem, poly: ChebyshevPolynomial) -> ChebyshevPolynomial | None:
    """
    Weighted Remez exchange on the sup-norm grid, started from the reference of alternating extrema of the current
    error. Solves  w(x_i) (f(x_i) - p(x_i)) = (-1)^i E  on n + 1 reference points and exchanges the reference for
    the new alternating extrema until the levelled error matches the grid maximum.

    :param prob: an unconstrained problem with p = inf
    :param poly: starting polynomial
    :return: the polished polynomial, or None when no alternating reference exists
    """
    disc = discretize_norm(prob.norm)
    values = _target_values(prob, disc)
    usable = disc.weights > 0
    u, f, w = disc.points[usable], values[usable], disc.weights[usable]
    V = cheb.chebvander(u, prob.n - 1)
    coeffs = np.array(poly.coeffs)
    for iteration in range(MAX_REMEZ_ITERATIONS):
        error = w * (f - V @ coeffs)
        reference = _alternating_extrema(error, prob.n + 1)
        if reference is None:
            return None
        alternation = (-1.0) ** np.arange(prob.n + 1)
        system = np.hstack([V[reference], (alternation / w[reference])[:, None]])
        try:
            solution = np.linalg.solve(system, f[reference])
        except np.linalg.LinAlgError:
            return None
        coeffs, level = solution[:-1], abs(solution[-1])
        peak = float(np.max(np.abs(w * (f - V @ coeffs))))
        if peak - level <= 1e-12 * max(peak, 1e-300):
            break
    return ChebyshevPolynomial(coeffs, poly.affine_map)


# ------------------------------------------- Solvers --------------------------------------------

def _pick_candidate(prob: ApproxProblem, solution: ApproxSolution,
                    candidates: Sequence[ChebyshevPolynomial]) -> ApproxSolution:
    Y = prob.inflections
    interval = prob.norm.interval
    for candidate in candidates:
        if candidate.domain != (interval.a, interval.b):
            raise ParameterError("Candidate polynomial lives on {}, not on the problem's interval.".format(
                candidate.domain))
        if candidate.degree() > prob.n - 1:
            continue
        candidate = ChebyshevPolynomial(candidate.coeffs[:prob.n], candidate.affine_map).padded(prob.n)
        residuals = []
        if prob.constraint.is_shape_constrained:
            residuals = coconvexity_residuals(candidate, Y)
            if not _is_certified(residuals):
                continue
        error = _reported_error(prob, candidate)
        if error < solution.error or (solution.status is not SolveStatus.OPTIMAL and error <= solution.error):
            solution = ApproxSolution(candidate, error, solution.discretization_error_estimate,
                                      [r for r, _ in residuals], solution.iterations, SolveStatus.OPTIMAL)
    return solution


def _finish(prob: ApproxProblem, poly: ChebyshevPolynomial, disc: NormDiscretization, values: np.ndarray,
            iterations: int, status: SolveStatus, residuals: Sequence[tuple],
            candidates: Sequence[ChebyshevPolynomial]) -> ApproxSolution:
    solution = ApproxSolution(poly, _reported_error(prob, poly), _discretization_estimate(prob, poly, disc, values),
                              [r for r, _ in residuals], iterations, status)
    return _pick_candidate(prob, solution, candidates)


def _status(result: KernelResult) -> SolveStatus:
    return SolveStatus.OPTIMAL if result.converged else SolveStatus.DEGRADED


def best_unconstrained(prob: ApproxProblem, polish: bool = False,
                       candidates: Sequence[ChebyshevPolynomial] = ()) -> ApproxSolution:
    """
    Best approximation from pi_n without shape constraints: minimizes the discretized weighted norm of f - p (least
    squares for p = 2, linear programs for p = 1 and p = inf, reweighted least squares otherwise). The reported
    error is recomputed by :func:`~coconvex_approx.weighted_spaces.weighted_lp_norm`.

    :param prob: the problem (constraint NONE)
    :param polish: for p = inf, try to improve the linear-programming optimum by Remez exchange; the polished
        polynomial is kept only if its error is smaller
    :param candidates: polynomials (e.g. earlier solutions) that replace the result if their error is smaller
    """
    if prob.constraint.kind is not ShapeKind.NONE:
        raise ParameterError("best_unconstrained needs a problem without shape constraint.")
    disc = discretize_norm(prob.norm)
    values = _target_values(prob, disc)
    result = solve_discrete(_discrete_problem(prob, disc, values, prob.n), prob.solver_tol)
    poly = _as_polynomial(prob, result.coeffs)
    solution = _finish(prob, poly, disc, values, result.iterations, _status(result), (), candidates)
    if polish and math.isinf(prob.p):
        polished = remez_polish(prob, solution.polynomial)
        if polished is not None:
            polished_error = _reported_error(prob, polished)
            if polished_error < solution.error:
                return ApproxSolution(polished, polished_error, solution.discretization_error_estimate, (),
                                      solution.iterations, solution.status)
        logging.info("Remez polish did not improve the minimax error; keeping the linear-programming solution.")
    return solution


def _shape_constrained(prob: ApproxProblem, candidates: Sequence[ChebyshevPolynomial]) -> ApproxSolution:
    Y = prob.inflections
    disc = discretize_norm(prob.norm)
    values = _target_values(prob, disc)

    if prob.n < 3 or (Y.s > 0 and prob.n < Y.s + 3):
        # p'' would have degree below s, so it must vanish: the feasible set is the linear polynomials
        result = solve_discrete(_discrete_problem(prob, disc, values, min(prob.n, 2)), prob.solver_tol)
        poly = _as_polynomial(prob, result.coeffs)
        return _finish(prob, poly, disc, values, result.iterations, _status(result),
                       coconvexity_residuals(poly, Y), candidates)

    points = prob.constraint_grid
    iterations = 0
    for round_number in range(1, MAX_CERTIFICATION_ROUNDS + 1):
        G = constraint_matrix(Y, prob.n, points)
        result = solve_discrete(_discrete_problem(prob, disc, values, prob.n, G), prob.solver_tol)
        iterations += result.iterations
        poly = _as_polynomial(prob, result.coeffs)
        residuals = coconvexity_residuals(poly, Y)
        if _is_certified(residuals):
            return _finish(prob, poly, disc, values, iterations, _status(result), residuals, candidates)
        logging.debug("Certification round {} failed with {} points per segment (worst residual {:.3g})."
                      .format(round_number, points, min(r for r, _ in residuals)))
        points *= 2

    lifted, certified = lift_to_shape(poly, Y)
    residuals = coconvexity_residuals(lifted, Y)
    if certified:
        logging.info("Shape certified after lifting the solution by a shape-preserving correction.")
        return _finish(prob, lifted, disc, values, iterations, _status(result), residuals, candidates)
    logging.warning("Shape certification failed after {} rounds and lifting (worst residual {:.3g}); reporting "
                    "UNCERTIFIED.".format(MAX_CERTIFICATION_ROUNDS, min(r for r, _ in residuals)))
    return _finish(prob, poly, disc, values, iterations, SolveStatus.UNCERTIFIED, coconvexity_residuals(poly, Y),
                   candidates)


def best_convex(prob: ApproxProblem, candidates: Sequence[ChebyshevPolynomial] = ()) -> ApproxSolution:
    """
    Best convex approximation from pi_n: the objective of :func:`best_unconstrained` with p''(xi_m) >= 0 at
    Chebyshev sample points, certified afterwards by the exact convexity check (doubling the sample grid up to three
    times, then lifting). A result that still fails the certificate has status UNCERTIFIED.

    :param prob: the problem (constraint CONVEX)
    :param candidates: certified polynomials that replace the result if their error is smaller
    """
    if prob.constraint.kind is not ShapeKind.CONVEX:
        raise ParameterError("best_convex needs a problem with a convexity constraint.")
    return _shape_constrained(prob, candidates)


def best_coconvex(prob: ApproxProblem, candidates: Sequence[ChebyshevPolynomial] = ()) -> ApproxSolution:
    """
    Best coconvex approximation from pi_n with respect to the problem's inflection partition Y: the sign of p'' on
    each segment [y_{i+1}, y_i] alternates, starting convex on the rightmost segment. Sampled on segment-local
    Chebyshev grids and certified as in :func:`best_convex`.

    :param prob: the problem (constraint COCONVEX)
    :param candidates: certified polynomials that replace the result if their error is smaller
    """
    if prob.constraint.kind is not ShapeKind.COCONVEX:
        raise ParameterError("best_coconvex needs a problem with a coconvexity constraint.")
    return _shape_constrained(prob, candidates)


def best_approximation(prob: ApproxProblem, candidates: Sequence[ChebyshevPolynomial] = ()) -> ApproxSolution:
    """Dispatches to the solver matching the problem's constraint."""
    if prob.constraint.kind is ShapeKind.NONE:
        return best_unconstrained(prob, candidates=candidates)
    if prob.constraint.kind is ShapeKind.CONVEX:
        return best_convex(prob, candidates)
    return best_coconvex(prob, candidates)


def degree_sequences(target, constraint: ShapeConstraint, norm: WeightedNormParams, n_values: Sequence[int],
                     solver_tol: float = SOLVER_TOLERANCE) -> list:
    """
    Degrees of best unconstrained and shape-constrained approximation for several n. Each solve is offered the
    previous n's solution of its own column as a candidate, so both columns are nonincreasing in n. The two columns
    are solved independently: the unconstrained error stays below the constrained one only up to the solver and
    discretization tolerances.

    :param target: the function, on ``norm.interval``
    :param constraint: the shape constraint of the second column
    :param norm: the weighted norm
    :param n_values: polynomial space dimensions
    :param solver_tol: solver tolerance
    :return: list of (n, unconstrained solution, constrained solution), by increasing n
    """
    rows = []
    free_candidates, shaped_candidates = [], []
    for n in sorted(n_values):
        free_problem = ApproxProblem(target, n, norm, ShapeConstraint.none(), solver_tol=solver_tol)
        if constraint.is_shape_constrained:
            shaped = best_approximation(ApproxProblem(target, n, norm, constraint, solver_tol=solver_tol),
                                        shaped_candidates)
            free = best_unconstrained(free_problem, candidates=free_candidates)
        else:
            free = shaped = best_unconstrained(free_problem, candidates=free_candidates)
        logging.info("n = {}: unconstrained {:.6g}, constrained {:.6g} ({})".format(n, free.error, shaped.error,
                                                                                   shaped.status.value))
        rows.append((n, free, shaped))
        free_candidates = [free.polynomial]
        shaped_candidates = [shaped.polynomial] if shaped.status is SolveStatus.OPTIMAL else shaped_candidates
    return rows
