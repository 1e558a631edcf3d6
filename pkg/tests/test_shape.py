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

import numpy as np
import pytest
from coconvex_approx.polynomials import ChebyshevPolynomial
from coconvex_approx.shape import InflectionPartition, coconvexity_residuals, convexity_sign_condition, \
    extrema_on, is_coconvex, is_coconvex_function, is_convex, is_k_monotone
from coconvex_approx.utilities import DomainError, ParameterError


def power(*coeffs, domain=(-1.0, 1.0)):
    return ChebyshevPolynomial.from_power_basis(coeffs, domain)


class TestInflectionPartition:

    def test_points_are_sorted_decreasingly(self):
        Y = InflectionPartition([-0.5, 0.5, 0.0])
        assert Y.points == (0.5, 0.0, -0.5)
        assert Y.s == 3
        assert Y.with_sentinels() == (1.0, 0.5, 0.0, -0.5, -1.0)

    def test_segments_alternate_from_the_right(self):
        segments = InflectionPartition([0.0]).segments()
        assert [(seg.lo, seg.hi, seg.sign) for seg in segments] == [(0.0, 1.0, 1), (-1.0, 0.0, -1)]

    def test_flipped(self):
        Y = InflectionPartition([0.0]).flipped()
        assert [seg.sign for seg in Y.segments()] == [-1, 1]
        assert Y.flipped() == InflectionPartition([0.0])

    def test_sign_function(self):
        Y = InflectionPartition([0.5, -0.5])
        np.testing.assert_array_equal(Y.sign_function(np.array([0.9, 0.0, -0.9])), [1, -1, 1])
        np.testing.assert_array_equal(InflectionPartition().sign_function(np.array([-1.0, 1.0])), [1, 1])

    def test_sign_polynomial_matches_sign_function(self):
        Y = InflectionPartition([0.3, -0.4])
        x = np.array([-0.9, 0.0, 0.8])
        np.testing.assert_array_equal(np.sign(Y.sign_polynomial()(x)), Y.sign_function(x))

    def test_on_interval_maps_points(self):
        Y = InflectionPartition.on_interval([0.5], (-1.0, 2.0))
        assert Y.points == pytest.approx((0.0,))

    @pytest.mark.parametrize("points", [[1.0], [-1.2], [0.1, 0.1 + 1e-8]])
    def test_invalid_points(self, points):
        with pytest.raises(ParameterError):
            InflectionPartition(points)


class TestPolynomialShape:

    def test_extrema(self):
        low, high = extrema_on(power(0.0, -3.0, 0.0, 1.0), -1.0, 1.0)
        assert (low, high) == pytest.approx((-2.0, 2.0))

    def test_convexity(self):
        assert is_convex(power(0.0, 0.0, 1.0))
        assert not is_convex(power(0.0, 0.0, 0.0, 1.0))
        assert is_convex(power(1.0, 2.0))

    def test_cubic_is_coconvex_at_zero(self):
        cubic = power(0.0, 0.0, 0.0, 1.0)
        assert is_coconvex(cubic, InflectionPartition([0.0]))
        assert not is_coconvex(cubic, InflectionPartition([0.0]).flipped())
        assert not is_coconvex(cubic, InflectionPartition([0.5]))

    def test_residuals_per_segment(self):
        residuals = coconvexity_residuals(power(0.0, 0.0, 0.0, 1.0), InflectionPartition([0.5]))
        assert len(residuals) == 2
        # on [0.5, 1] p'' = 6x >= 3; on [-1, 0.5] -p'' reaches -3 at x = 0.5
        assert residuals[0][0] == pytest.approx(3.0)
        assert residuals[1][0] == pytest.approx(-3.0)

    def test_general_domain(self):
        # (x - 0.5)^3 on [-1, 2] changes from concave to convex at 0.5, i.e. at 0 in reference coordinates
        p = power(-0.125, 0.75, -1.5, 1.0, domain=(-1.0, 2.0))
        assert is_coconvex(p, InflectionPartition([0.0]))

    def test_tolerance(self):
        almost = power(0.0, 0.0, -1e-12, 0.0)
        assert is_convex(almost)
        assert not is_convex(almost, tol=0.0)


class TestSampledShape:

    def test_coconvex_function(self):
        assert is_coconvex_function(lambda x: 6 * x, InflectionPartition([0.0]))
        assert not is_coconvex_function(lambda x: -6 * x, InflectionPartition([0.0]))

    def test_coconvex_function_on_interval(self):
        Y = InflectionPartition.on_interval([1.0], (0.0, 2.0))
        assert is_coconvex_function(lambda x: x - 1, Y, (0.0, 2.0))

    @pytest.mark.parametrize("f, k, expected", [
        (lambda x: x ** 2, 2, True),
        (lambda x: -x ** 2, 2, False),
        (lambda x: x ** 3, 3, True),
        (lambda x: np.exp(x), 4, True),
        (lambda x: x ** 3, 2, False),
    ])
    def test_k_monotone(self, f, k, expected):
        assert is_k_monotone(f, k) is expected

    def test_k_monotone_validates_arguments(self):
        with pytest.raises(ParameterError):
            is_k_monotone(np.exp, 0)
        with pytest.raises(ParameterError):
            is_k_monotone(np.exp, 3, grid_size=3)

    def test_sign_condition(self):
        assert convexity_sign_condition(lambda x: 6 * x, 0.0, (-0.5, 0.5))
        assert not convexity_sign_condition(lambda x: 6 * x, 0.2, (-0.5, 0.5))
        with pytest.raises(DomainError):
            convexity_sign_condition(lambda x: x, 0.0, (-2.0, 0.0))


def test_convexity_of_random_cubics():
    # p'' is linear, so p is convex iff p'' is nonnegative at both ends
    rng = np.random.default_rng(2024)
    for _ in range(50):
        p = power(*rng.normal(size=4))
        second = p.derivative(2)
        expected = min(second(-1.0), second(1.0)) >= 0
        assert is_convex(p, tol=0.0) == expected
        assert is_coconvex_function(second, InflectionPartition(), tol=0.0) == expected
