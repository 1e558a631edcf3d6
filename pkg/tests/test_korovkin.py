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
from coconvex_approx.korovkin import FourierCoefficients, OperatorMode, OperatorSpec, SummabilityMatrix, \
    fejer_apply, fejer_convergence, fourier_coeffs, joint_nullity_experiment, korovkin_test_functions, \
    modulus_sum_experiment, ordinary_limit_verdict, partial_sum, st_A_limit, tn_apply
from coconvex_approx.shape import InflectionPartition
from coconvex_approx.utilities import ParameterError
from coconvex_approx.weighted_spaces import WeightedNormParams


def squares_indicator(N):
    n = np.arange(1, N + 1)
    return (np.round(np.sqrt(n)) ** 2 == n).astype(float)


class TestFourier:

    def test_constant(self):
        coeffs = fourier_coeffs(lambda x: np.ones_like(x), 3)
        np.testing.assert_allclose(coeffs.a, [2.0, 0.0, 0.0, 0.0], atol=1e-14)
        np.testing.assert_allclose(coeffs.b, 0.0, atol=1e-14)

    def test_trigonometric_polynomial(self):
        coeffs = fourier_coeffs(lambda x: np.sin(x) + 0.5 * np.cos(3 * x), 4)
        np.testing.assert_allclose(coeffs.a, [0.0, 0.0, 0.0, 0.5, 0.0], atol=1e-13)
        np.testing.assert_allclose(coeffs.b, [0.0, 1.0, 0.0, 0.0, 0.0], atol=1e-13)
        assert coeffs.K == 4

    def test_truncation(self):
        coeffs = fourier_coeffs(np.cos, 5).truncated(2)
        assert isinstance(coeffs, FourierCoefficients) and coeffs.K == 2
        with pytest.raises(ParameterError):
            coeffs.truncated(3)

    def test_partial_sum_reproduces_trigonometric_polynomials(self):
        x = np.linspace(-3, 3, 7)
        np.testing.assert_allclose(partial_sum(lambda t: np.cos(2 * t), 2, x), np.cos(2 * x), atol=1e-13)
        np.testing.assert_allclose(partial_sum(lambda t: np.cos(2 * t), 1, x), 0.0, atol=1e-13)


class TestOperators:

    def test_fejer_damps_frequencies(self):
        assert fejer_apply(np.sin, 2, math.pi / 2) == pytest.approx(0.5)
        assert fejer_apply(np.sin, 1, math.pi / 2) == pytest.approx(0.0, abs=1e-14)

    def test_fejer_preserves_constants(self):
        assert fejer_apply(lambda x: 3 * np.ones_like(x), 5, 0.7) == pytest.approx(3.0)

    def test_fejer_needs_positive_order(self):
        with pytest.raises(ParameterError):
            fejer_apply(np.sin, 0, 0.0)

    def test_reduction_mode_is_the_fejer_operator(self):
        f = lambda x: np.exp(np.cos(x))
        x = np.linspace(-math.pi, math.pi, 9)
        np.testing.assert_allclose(tn_apply(f, OperatorSpec.fejer(), 6, x), fejer_apply(f, 6, x), atol=1e-13)

    def test_zero_factors_give_the_mean(self):
        f = lambda x: 1 + np.sin(x)
        assert tn_apply(f, OperatorSpec.zero(), 4, 0.3) == pytest.approx(1.0)

    def test_literal_mode(self):
        # with nodes (-1, 0, 1): a_1 (x - 1)/(-1) for f = cos, lambda_1^(2) = 1/2
        spec = OperatorSpec.fejer(OperatorMode.LITERAL)
        assert tn_apply(np.cos, spec, 2, 0.5) == pytest.approx(0.5 * (1 - 0.5))

    def test_literal_mode_rejects_coinciding_nodes(self):
        spec = OperatorSpec.fejer(OperatorMode.LITERAL, x_star=0.0)
        with pytest.raises(ParameterError):
            tn_apply(np.cos, spec, 2, 0.5)

    def test_fejer_convergence(self):
        report = fejer_convergence(np.sin, [2 ** j for j in range(1, 10)])
        assert report.decreasing
        assert report.errors[-1] < 0.01
        # F_n sin = (1 - 1/n) sin
        np.testing.assert_allclose(report.errors, [1 / n for n in report.ns], rtol=1e-10)


class TestSummability:

    def test_cesaro_densities(self):
        A = SummabilityMatrix.cesaro(4)
        np.testing.assert_allclose(A.densities([1, 0, 1, 0]), [1.0, 0.5, 2 / 3, 0.5])
        np.testing.assert_allclose(A.row_sums(), 1.0)
        assert A.entry(3, 2) == pytest.approx(1 / 3)
        assert A.entry(2, 3) == 0.0

    def test_regularity_report(self):
        report = SummabilityMatrix.cesaro(1000).regularity_report()
        assert report["max_row_sum_deviation"] == pytest.approx(0.0, abs=1e-12)
        assert report["last_row_leading_entries"] == pytest.approx(1e-3)

    def test_from_array(self):
        A = SummabilityMatrix.from_array([[1.0, 0.0], [0.5, 0.5]])
        np.testing.assert_allclose(A.densities([0, 1]), [0.0, 0.5])
        with pytest.raises(ParameterError):
            SummabilityMatrix.from_array([[1.0, -0.1], [0.0, 1.0]])
        with pytest.raises(ParameterError):
            SummabilityMatrix.from_array([[1.0, 0.0]])

    def test_squares_are_cesaro_null_but_not_convergent(self):
        N = 10000
        seq = squares_indicator(N)
        assert st_A_limit(seq, SummabilityMatrix.cesaro(N), 0.0, 0.5, threshold=0.05).accepted
        assert st_A_limit(seq, SummabilityMatrix.cesaro(N), 1.0, 0.5, threshold=0.05).verdict == "REJECT"
        assert ordinary_limit_verdict(seq, 0.0, 0.5) == "REJECT"

    def test_densities_rising_inside_the_last_quartile_are_rejected(self):
        N = 1000
        A = SummabilityMatrix.cesaro(N)
        seq = np.zeros(N)
        seq[:30] = 1.0
        assert st_A_limit(seq, A, 0.0, 0.5, threshold=0.05).accepted
        seq[849:858] = 1.0
        result = st_A_limit(seq, A, 0.0, 0.5, threshold=0.05)
        assert result.densities[-1] < result.densities[(3 * N) // 4]
        assert result.tail_max == pytest.approx(39 / 858)
        assert result.verdict == "REJECT"
        assert st_A_limit(seq, A, 0.0, 0.5, threshold=0.05, rise_tol=0.2).accepted

    def test_identity_matrix_agrees_with_ordinary_limits(self):
        N = 400
        for seq in (squares_indicator(N), 1 / np.arange(1, N + 1)):
            statistical = st_A_limit(seq, SummabilityMatrix.identity(N), 0.0, 0.01).verdict
            assert statistical == ordinary_limit_verdict(seq, 0.0, 0.01)

    def test_limit_validation(self):
        with pytest.raises(ParameterError):
            st_A_limit([0.0, 0.0], SummabilityMatrix.cesaro(3), 0.0, 0.1)
        with pytest.raises(ParameterError):
            st_A_limit([0.0, 0.0, 0.0], SummabilityMatrix.cesaro(3), 0.0, 0.0)


class TestExperiments:

    def test_test_functions(self):
        functions = korovkin_test_functions()
        x = np.array([-0.5, 0.5])
        np.testing.assert_allclose(functions["f1"](x), 1.0)
        np.testing.assert_allclose(functions["f2"](x), 1 - x)
        np.testing.assert_allclose(functions["f3"](x), -(x + 1))

    def test_test_functions_need_distinct_nodes(self):
        with pytest.raises(ParameterError):
            korovkin_test_functions(OperatorSpec.fejer(x_i=1.0))

    def test_polynomial_family_is_jointly_null(self):
        report = joint_nullity_experiment({"square": lambda x: x ** 2}, InflectionPartition(),
                                          SummabilityMatrix.identity(8), WeightedNormParams.create(p=2), 8)
        assert [row["name"] for row in report.rows] == ["f1", "f2", "f3", "square"]
        assert all(row["jointly_null"] for row in report.rows)
        assert report.all_consistent

    def test_matrix_wider_than_the_sequences(self):
        with pytest.raises(ParameterError):
            joint_nullity_experiment({}, InflectionPartition(), SummabilityMatrix.cesaro(9),
                                     WeightedNormParams.create(p=2), 8)

    @pytest.mark.parametrize("i", [2, 3])
    def test_moduli_of_linear_test_functions_vanish(self, i):
        report = modulus_sum_experiment(i, SummabilityMatrix.cesaro(16), 16)
        assert report.verdict == "ACCEPT"
        np.testing.assert_allclose(report.sums, 0.0, atol=1e-12)
        assert report.t[0] == pytest.approx(1.0)

    def test_modulus_order_must_be_at_least_two(self):
        with pytest.raises(ParameterError):
            modulus_sum_experiment(1)
