"""
Subpackage containing the best-approximation solvers: degrees of best unconstrained, convex and coconvex polynomial
approximation in weighted L_p norms (p >= 1), best approximation by C0 / C1 piecewise polynomials, and the linear
programming / least-squares kernels they share.
"""

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

from .problems import ShapeKind, ShapeConstraint, SolveStatus, ApproxProblem, ApproxSolution, \
    MIN_CONSTRAINT_POINTS, SOLVER_TOLERANCE
from .kernels import DiscreteProblem, KernelResult, solve_discrete, least_squares, constrained_least_squares, \
    least_distance, minimax_lp, l1_lp, irls
from .best import best_unconstrained, best_convex, best_coconvex, best_approximation, remez_polish, lift_to_shape, \
    constraint_matrix, second_derivative_matrix, degree_sequences, CERTIFICATION_TOLERANCE
from .splines import SplineSolution, best_spline, spline_basis_matrix, continuity_matrix, spline_shape_residuals
