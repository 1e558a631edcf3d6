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

import math
import numpy as np
import pytest
from coconvex_approx.harness import FIXTURE_FAMILY, REGISTRY
from coconvex_approx.polynomials import ChebyshevPartition, piecewise_continuity_check
from coconvex_approx.shape import InflectionPartition, is_coconvex, is_convex
from coconvex_approx.solvers import ApproxProblem, ApproxSolution, DiscreteProblem, ShapeConstraint, ShapeKind, \
    SolveStatus, best_approximation, best_coconvex, best_convex, best_spline, best_unconstrained, \
    constrained_least_squares, degree_sequences, least_squares, minimax_lp, solve_discrete
from coconvex_approx.utilities import DomainError, ParameterError
from coconvex_approx.weighted_spaces import WeightedNormParams

SUP = WeightedNormParams.create(p=math.inf)
L2 = WeightedNormParams.create(p=2)


def cube(x):
    return np.asarray(x, dtype=float) ** 3


def square(x):
    return np.asarray(x, dtype=float) ** 2


def assert_nested_and_monotone(rows):
    """Unconstrained below constrained up to the discretization estimates; certified columns nonincreasing in n."""
    for _, free, shaped in rows:
        slack = free.discretization_error_estimate + shaped.discretization_error_estimate + 1e-8 * (1 + shaped.error)
        assert free.error <= shaped.error + slack
    E = [free.error for _, free, _ in rows]
    E2 = [shaped.error for _, _, shaped in rows if shaped.status is SolveStatus.OPTIMAL]
    assert all(b <= a + 1e-12 for a, b in zip(E, E[1:]))
    assert all(b <= a + 1e-12 for a, b in zip(E2, E2[1:]))


def coefficient_box_minimax(f, n, half_width=2.0, samples=1001, tol=2e-5):
    """
    Brute-force sup-norm best approximation from polynomials of degree < n: exhaustive search over a box of Chebyshev
    coefficients, shrunk around the best grid point until the grid step drops below tol.
    """
    x = np.linspace(-1.0, 1.0, samples)
    basis = np.polynomial.chebyshev.chebvander(x, n - 1).T
    target = f(x)
    points = 17 if n <= 3 else 9
    center, step = np.zeros(n), 2 * half_width / (points - 1)
    while True:
        axes = [c + step * np.arange(-(points // 2), points // 2 + 1) for c in center]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
        errors = np.max(np.abs(target - grid @ basis), axis=1)
        center = grid[np.argmin(errors)]
        if step < tol:
            return float(errors.min())
        step = 6 * step / (points - 1)


class TestShapeConstraint:

    def test_parse(self):
        assert ShapeConstraint.parse("none").kind is ShapeKind.NONE
        assert ShapeConstraint.parse("coconvex", [0.0]).partition == InflectionPartition([0.0])
        assert ShapeConstraint.parse("coconvex").kind is ShapeKind.CONVEX

    def test_partition_only_for_coconvexity(self):
        with pytest.raises(ParameterError):
            ShapeConstraint(ShapeKind.CONVEX, InflectionPartition([0.0]))
        with pytest.raises(ParameterError):
            ShapeConstraint(ShapeKind.COCONVEX)


class TestProblem:

    @pytest.mark.parametrize("n", [0, -1, 1.5, True])
    def test_dimension_must_be_a_positive_integer(self, n):
        with pytest.raises(DomainError):
            ApproxProblem(cube, n, SUP)

    def test_quasi_norms_rejected(self):
        with pytest.raises(ParameterError):
            ApproxProblem(cube, 3, WeightedNormParams.create(p=0.5))

    def test_default_constraint_grid(self):
        assert ApproxProblem(cube, 3).constraint_grid == 64
        assert ApproxProblem(cube, 30).constraint_grid == 120


class TestKernels:

    def test_least_squares(self):
        A = np.vander(np.linspace(-1, 1, 9), 2, increasing=True)
        np.testing.assert_allclose(least_squares(A, 3 + 2 * A[:, 1]), [3.0, 2.0], atol=1e-6)

    def test_constrained_least_squares_respects_constraints(self):
        A = np.eye(2)
        c = constrained_least_squares(A, np.array([-1.0, 2.0]), np.array([[1.0, 0.0]]))
        np.testing.assert_allclose(c, [0.0, 2.0], atol=1e-8)

    def test_minimax_midrange(self):
        result = minimax_lp(np.ones((2, 1)), np.array([0.0, 1.0]))
        assert result.converged
        assert result.coeffs[0] == pytest.approx(0.5)

    def test_more_coefficients_than_points_rejected(self):
        with pytest.raises(ParameterError):
            solve_discrete(DiscreteProblem(np.ones((2, 3)), np.zeros(2), np.ones(2), 2.0))


class TestUnconstrained:

    def test_minimax_cubic_by_quadratics(self):
        # x^3 - (3/4) x = T_3(x) / 4 equioscillates
        solution = best_unconstrained(ApproxProblem(cube, 3, SUP))
        assert solution.error == pytest.approx(0.25, abs=1e-3)
        assert solution.status is SolveStatus.OPTIMAL

    def test_minimax_square_by_constants(self):
        assert best_unconstrained(ApproxProblem(square, 1, SUP)).error == pytest.approx(0.5, abs=1e-6)

    @pytest.mark.parametrize("f, n, expected", [(cube, 3, 0.25), (square, 1, 0.5)])
    def test_minimax_classics_against_coefficient_boxes(self, f, n, expected):
        solution = best_unconstrained(ApproxProblem(f, n, SUP))
        assert solution.error == pytest.approx(expected, abs=1e-3)
        assert solution.error == pytest.approx(coefficient_box_minimax(f, n), abs=1e-3)

    @pytest.mark.slow
    @pytest.mark.parametrize("f, n", [
        (np.exp, 3),
        (np.abs, 3),
        (lambda x: np.sin(np.pi * x), 4),
        (lambda x: 1 / (2 + x), 2),
        (lambda x: np.cos(2 * x), 4),
    ])
    def test_small_dimensions_against_coefficient_boxes(self, f, n):
        solution = best_unconstrained(ApproxProblem(f, n, SUP))
        assert solution.error == pytest.approx(coefficient_box_minimax(f, n), abs=1e-3)

    def test_least_squares_cubic(self):
        # the Legendre component of x^3 beyond degree 2 is (2/5) P_3, with ||P_3||^2 = 2/7
        solution = best_unconstrained(ApproxProblem(cube, 3, L2))
        assert solution.error == pytest.approx(0.4 * math.sqrt(2 / 7), rel=1e-8)

    def test_l1_by_constants(self):
        solution = best_unconstrained(ApproxProblem(lambda x: x, 1, WeightedNormParams.create(p=1)))
        assert solution.error == pytest.approx(1.0, rel=1e-6)

    def test_reweighted_least_squares(self):
        solution = best_unconstrained(ApproxProblem(lambda x: x, 1, WeightedNormParams.create(p=3)))
        assert solution.error == pytest.approx(0.5 ** (1 / 3), rel=1e-5)

    def test_exact_when_target_is_in_the_space(self):
        solution = best_unconstrained(ApproxProblem(cube, 4, SUP))
        assert solution.error < 1e-9

    def test_remez_polish_never_hurts(self):
        plain = best_unconstrained(ApproxProblem(np.exp, 4, SUP))
        polished = best_unconstrained(ApproxProblem(np.exp, 4, SUP), polish=True)
        assert polished.error <= plain.error + 1e-15

    def test_general_interval(self):
        norm = WeightedNormParams.create(p=math.inf, interval=(0.0, 2.0))
        solution = best_unconstrained(ApproxProblem(lambda x: (x - 1) ** 3, 3, norm))
        assert solution.error == pytest.approx(0.25, abs=1e-3)
        assert solution.polynomial.domain == (0.0, 2.0)

    def test_rejects_shape_constraints(self):
        with pytest.raises(ParameterError):
            best_unconstrained(ApproxProblem(cube, 3, SUP, ShapeConstraint.convex()))

    def test_json_round_trip(self):
        solution = best_unconstrained(ApproxProblem(cube, 3, L2))
        restored = ApproxSolution._from_dict(solution._to_dict())
        assert restored.error == solution.error
        assert restored.polynomial == solution.polynomial
        assert restored.status is solution.status


class TestShapeConstrained:

    def test_coconvex_cubic_is_reproduced(self):
        problem = ApproxProblem(cube, 4, SUP, ShapeConstraint.coconvex([0.0]))
        solution = best_coconvex(problem)
        assert solution.error < 1e-7
        assert is_coconvex(solution.polynomial, InflectionPartition([0.0]))

    def test_convex_approximation_of_a_cubic(self):
        problem = ApproxProblem(cube, 4, SUP, ShapeConstraint.convex())
        solution = best_convex(problem)
        assert solution.status is SolveStatus.OPTIMAL
        assert is_convex(solution.polynomial)
        assert solution.min_residual >= -1e-9
        assert solution.error > best_unconstrained(ApproxProblem(cube, 4, SUP)).error

    def test_low_dimensions_reduce_to_linear_polynomials(self):
        solution = best_convex(ApproxProblem(square, 2, SUP, ShapeConstraint.convex()))
        assert solution.error == pytest.approx(0.5, abs=1e-6)

    def test_dispatch(self):
        problem = ApproxProblem(square, 3, L2, ShapeConstraint.convex())
        assert best_approximation(problem).error < 1e-8
        with pytest.raises(ParameterError):
            best_coconvex(problem)

    def test_weighted_coconvex(self):
        norm = WeightedNormParams.create(0.5, 0.5, 2)
        problem = ApproxProblem(lambda x: -np.sin(np.pi * x), 6, norm, ShapeConstraint.coconvex([0.0]))
        solution = best_coconvex(problem)
        assert solution.status is SolveStatus.OPTIMAL
        assert is_coconvex(solution.polynomial, InflectionPartition([0.0]))

    @pytest.mark.parametrize("p", [2, math.inf])
    def test_degree_sequences(self, p):
        norm = WeightedNormParams.create(p=p)
        rows = degree_sequences(lambda x: -np.sin(np.pi * x), ShapeConstraint.coconvex([0.0]), norm, range(1, 9))
        assert [n for n, _, _ in rows] == list(range(1, 9))
        assert_nested_and_monotone(rows)

    def test_unconstrained_column_is_solved_on_its_own(self):
        # x^3 + x^2 from quadratics: the unconstrained best is 3x/5 + x^2, the coconvex one is the line 3x/5 + 1/3
        rows = degree_sequences(lambda x: cube(x) + square(x), ShapeConstraint.coconvex([0.0]), L2, [3])
        _, free, shaped = rows[0]
        assert free.polynomial.derivative(2)(0.0) == pytest.approx(2.0, rel=1e-8)
        assert shaped.error ** 2 - free.error ** 2 == pytest.approx(8 / 45, rel=1e-6)

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [2, math.inf])
    @pytest.mark.parametrize("name", FIXTURE_FAMILY)
    def test_fixture_family_columns(self, name, p):
        entry = REGISTRY[name]
        norm = WeightedNormParams.create(p=p, interval=entry.interval)
        rows = degree_sequences(entry.expression, ShapeConstraint.coconvex(entry.partition), norm, range(1, 9))
        assert_nested_and_monotone(rows)


class TestSplines:

    def test_abs_is_reproduced_with_a_knot_at_zero(self):
        solution = best_spline(np.abs, ChebyshevPartition(2), 2, "C0")
        assert solution.error < 1e-8
        assert piecewise_continuity_check(solution.spline)["C0"]

    def test_c1_quadratics(self):
        solution = best_spline(lambda x: np.asarray(x) ** 4, ChebyshevPartition(6), 3, "C1", norm=SUP)
        assert solution.error < 0.05
        assert piecewise_continuity_check(solution.spline)["C1"]

    def test_more_intervals_help(self):
        coarse = best_spline(np.exp, ChebyshevPartition(2), 2, "C0", norm=SUP)
        fine = best_spline(np.exp, ChebyshevPartition(8), 2, "C0", norm=SUP)
        assert fine.error < coarse.error

    def test_convex_spline(self):
        solution = best_spline(square, ChebyshevPartition(4), 3, "C1", ShapeConstraint.convex())
        assert solution.error < 1e-8
        assert solution.status is SolveStatus.OPTIMAL

    def test_coconvex_c0_spline_respects_the_shape(self):
        Y = InflectionPartition([0.0])
        solution = best_spline(cube, ChebyshevPartition(4), 2, "C0", ShapeConstraint.coconvex(Y), SUP)
        assert solution.status is SolveStatus.OPTIMAL
        assert min(solution.constraint_residual) >= -1e-6

    def test_invalid_arguments(self):
        with pytest.raises(ParameterError):
            best_spline(square, ChebyshevPartition(2), 3, "C2")
        with pytest.raises(ParameterError):
            best_spline(square, ChebyshevPartition(2), 0)
        with pytest.raises(ParameterError):
            best_spline(square, [-1.0, 0.0, 0.5], 2)
        with pytest.raises(ParameterError):
            best_spline(square, ChebyshevPartition(2), 2, norm=WeightedNormParams.create(interval=(0.0, 1.0)))
