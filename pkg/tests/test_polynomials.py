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
from coconvex_approx.polynomials import ChebyshevPartition, ChebyshevPolynomial, PiecewisePolynomial, cheb_derivative, \
    cheb_eval, chebyshev_knots, piecewise_continuity_check
from coconvex_approx.utilities import DomainError, ParameterError


class TestChebyshevPolynomial:

    def test_evaluation_matches_chebyshev_basis(self):
        # T_3(x) = 4x^3 - 3x
        p = ChebyshevPolynomial([0, 0, 0, 1])
        x = np.linspace(-1, 1, 11)
        np.testing.assert_allclose(p(x), 4 * x ** 3 - 3 * x, atol=1e-14)
        assert cheb_eval(p, 0.5) == pytest.approx(-1.0)

    def test_power_basis_conversion(self):
        power = [1.0, -2.0, 0.0, 3.0]
        p = ChebyshevPolynomial.from_power_basis(power)
        np.testing.assert_allclose(p.to_power_basis(), power, atol=1e-14)
        assert p(2 / 3) == pytest.approx(1 - 4 / 3 + 3 * 8 / 27)

    def test_general_domain(self):
        p = ChebyshevPolynomial.from_power_basis([0.0, 0.0, 1.0], (-1.0, 2.0))
        assert p(2.0) == pytest.approx(4.0)
        assert p(0.5) == pytest.approx(0.25)
        assert p.derivative()(1.5) == pytest.approx(3.0)
        np.testing.assert_allclose(p.to_power_basis(), [0.0, 0.0, 1.0], atol=1e-13)

    def test_evaluation_outside_domain_raises(self):
        with pytest.raises(DomainError):
            ChebyshevPolynomial([1.0, 1.0])(1.5)

    def test_exact_derivatives(self):
        p = ChebyshevPolynomial.from_power_basis([0, 0, 0, 0, 1.0])
        np.testing.assert_allclose(p.derivative(2).to_power_basis()[:3], [0, 0, 12.0], atol=1e-13)
        assert p.derivative(5).is_zero()
        assert p.derivative(0) is p

    def test_cheb_derivative_of_t3(self):
        # T_3' = 3 U_2 = 12x^2 - 3 = 3 T_0 + 6 T_2
        dp = cheb_derivative(ChebyshevPolynomial([0, 0, 0, 1]))
        assert dp.degree_bound == 2
        np.testing.assert_allclose(dp.coeffs, [3.0, 0.0, 6.0], atol=1e-14)

    def test_antiderivative_vanishes_at_left_end(self):
        p = ChebyshevPolynomial.from_power_basis([1.0, 2.0], (0.0, 2.0))
        integral = p.antiderivative()
        assert integral(0.0) == pytest.approx(0.0, abs=1e-14)
        assert integral(2.0) == pytest.approx(2.0 + 4.0)

    def test_degree(self):
        p = ChebyshevPolynomial([1.0, 2.0, 0.0, 0.0])
        assert p.degree_bound == 3
        assert p.degree() == 1
        assert ChebyshevPolynomial.zero().degree() == 0
        assert ChebyshevPolynomial([1.0, 1e-15]).degree(tol=1e-12) == 0

    def test_roots_in_domain(self):
        p = ChebyshevPolynomial.from_power_basis([-0.25, 0.0, 1.0])
        np.testing.assert_allclose(p.roots(), [-0.5, 0.5], atol=1e-12)
        assert len(ChebyshevPolynomial.from_power_basis([1.0, 0.0, 1.0]).roots()) == 0

    def test_restricted_to_is_the_same_function(self):
        p = ChebyshevPolynomial([0.3, -1.0, 0.5, 2.0])
        q = p.restricted_to(0.0, 0.5)
        x = np.linspace(0.0, 0.5, 7)
        np.testing.assert_allclose(q(x), p(x), atol=1e-13)

    def test_arithmetic(self):
        p = ChebyshevPolynomial([1.0, 1.0])
        q = ChebyshevPolynomial([0.0, 0.0, 1.0])
        x = np.linspace(-1, 1, 5)
        np.testing.assert_allclose((p + q)(x), p(x) + q(x), atol=1e-14)
        np.testing.assert_allclose((p * q)(x), p(x) * q(x), atol=1e-14)
        np.testing.assert_allclose((2 - p)(x), 2 - p(x), atol=1e-14)

    def test_domains_must_match(self):
        with pytest.raises(ParameterError):
            ChebyshevPolynomial([1.0]) + ChebyshevPolynomial([1.0], (0.0, 1.0))

    def test_non_finite_coefficients_rejected(self):
        with pytest.raises(ParameterError):
            ChebyshevPolynomial([1.0, math.nan])

    def test_json_round_trip(self):
        p = ChebyshevPolynomial([1.0, 2.0, 3.0], (-1.0, 2.0))
        assert ChebyshevPolynomial._from_dict(p._to_dict()) == p


class TestChebyshevPartition:

    def test_two_intervals(self):
        np.testing.assert_allclose(ChebyshevPartition(2).knots, [-1.0, 0.0, 1.0], atol=1e-16)

    def test_knots_are_antisymmetric(self):
        knots = ChebyshevPartition(7).knots
        np.testing.assert_array_equal(knots, -knots[::-1])

    def test_knots_match_cosine_formula(self):
        n = 9
        np.testing.assert_allclose(ChebyshevPartition(n).knots, -np.cos(np.arange(n + 1) * np.pi / n), atol=1e-15)

    def test_mesh_norm_is_attained_in_the_middle(self):
        partition = ChebyshevPartition(8)
        assert partition.mesh_norm == pytest.approx(math.sin(math.pi / 8))
        assert len(partition.intervals()) == len(partition) == 8

    @pytest.mark.parametrize("n", [0, -3, 2.5, True])
    def test_invalid_sizes(self, n):
        with pytest.raises(DomainError):
            ChebyshevPartition(n)

    def test_knots_accepts_lists(self):
        partitions = chebyshev_knots([1, 2])
        assert [len(partition) for partition in partitions] == [1, 2]


class TestPiecewisePolynomial:

    def test_from_global_is_c1(self):
        p = ChebyshevPolynomial.from_power_basis([0.0, 1.0, 0.0, 1.0])
        s = PiecewisePolynomial.from_global(p, ChebyshevPartition(4))
        x = np.linspace(-1, 1, 17)
        np.testing.assert_allclose(s(x), p(x), atol=1e-13)
        check = piecewise_continuity_check(s)
        assert check["C0"] and check["C1"] and check["declared"]

    def test_abs_is_c0_but_not_c1(self):
        knots = [-1.0, 0.0, 1.0]
        s = PiecewisePolynomial.from_local_coefficients(knots, [[0.5, -0.5], [0.5, 0.5]], "C0")
        assert s(-0.5) == pytest.approx(0.5)
        assert s(0.75) == pytest.approx(0.75)
        check = piecewise_continuity_check(s)
        assert check["C0"] and not check["C1"]
        np.testing.assert_allclose(s.knot_jumps(1), [2.0])

    def test_declared_class_is_checked(self):
        s = PiecewisePolynomial.from_local_coefficients([-1.0, 0.0, 1.0], [[0.0, 1.0], [5.0, 1.0]], "C0")
        assert piecewise_continuity_check(s)["declared"] is False

    def test_derivative_lowers_class(self):
        s = PiecewisePolynomial.from_global(ChebyshevPolynomial([0, 0, 1.0]), [-1.0, 0.0, 1.0])
        assert s.derivative().continuity_class == "C0"
        assert s.derivative(2).continuity_class is None
        assert s.order == 3

    def test_pieces_must_live_on_their_intervals(self):
        with pytest.raises(ParameterError):
            PiecewisePolynomial([-1.0, 0.0, 1.0], [ChebyshevPolynomial([1.0]), ChebyshevPolynomial([1.0])])

    def test_evaluation_outside_raises(self):
        s = PiecewisePolynomial.from_global(ChebyshevPolynomial([1.0]), [-1.0, 1.0])
        with pytest.raises(DomainError):
            s(1.5)

    def test_json_round_trip(self):
        s = PiecewisePolynomial.from_global(ChebyshevPolynomial([0.2, 0.0, 1.0]), ChebyshevPartition(3))
        restored = PiecewisePolynomial._from_dict(s._to_dict())
        x = np.linspace(-1, 1, 9)
        np.testing.assert_allclose(restored(x), s(x))
        assert restored.continuity_class == "C1"
