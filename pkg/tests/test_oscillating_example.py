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
from scipy.integrate import quad
from coconvex_approx.harness import OscillatingExampleReport, abs_integral, oscillating_example, \
    oscillatory_abs_integral, smooth_abs_integral
from coconvex_approx.harness.oscillating_example import claimed_antiderivative_terms, f, mapped_weight, \
    piecewise_quartic, polynomial_term, p4, raw_weight
from coconvex_approx.utilities import ParameterError


def zero(x):
    return np.zeros_like(np.asarray(x, dtype=float))


def one(x):
    return np.ones_like(np.asarray(x, dtype=float))


def zeros_of_f(x_lo, x_hi):
    """The points where exp(x^4) = pi/2 + k pi, i.e. where tan(cos(exp(x^4))) vanishes."""
    u_lo, u_hi = math.exp(x_lo ** 4), math.exp(x_hi ** 4)
    k = np.arange(math.ceil((u_lo - math.pi / 2) / math.pi), math.floor((u_hi - math.pi / 2) / math.pi) + 1)
    return [math.log(math.pi / 2 + j * math.pi) ** 0.25 for j in k]


class TestFunctions:

    def test_weights(self):
        np.testing.assert_allclose(raw_weight(np.array([0.0, 2.0])), [1.0, -3.0])
        np.testing.assert_allclose(mapped_weight(np.array([-1.0, 0.5, 2.0])), [0.0, 1.0, 0.0], atol=1e-15)

    def test_candidates(self):
        assert p4(0.0) == pytest.approx(-math.e ** 3)
        assert piecewise_quartic(0.0) == pytest.approx(4.0)
        # sign flipped inside [1.005, 1.981]
        assert piecewise_quartic(1.5) == pytest.approx(1.25 * 1.75)
        assert piecewise_quartic(1.99) == pytest.approx((1.99 ** 2 - 1) * (1.99 ** 2 - 4))

    def test_polynomial_term(self):
        assert polynomial_term(one) == pytest.approx(0.0, abs=1e-12)
        assert polynomial_term(lambda x: np.asarray(x) ** 2) == pytest.approx(3 - 33 / 5)

    def test_printed_closed_forms_are_finite(self):
        assert all(math.isfinite(v) for v in claimed_antiderivative_terms())


class TestIntegrals:

    def test_smooth_part(self):
        points = zeros_of_f(0.0, 1.0)
        expected = 2 * quad(lambda x: abs(f(x)), 0.0, 1.0, points=points, epsabs=1e-13, epsrel=1e-13)[0]
        value, error = smooth_abs_integral(one, zero)
        assert value == pytest.approx(expected, rel=1e-9)
        assert error < 1e-8

    def test_smooth_part_with_weight_and_candidate(self):
        def integrand(x):
            return abs(raw_weight(x) * (f(x) - p4(x)))
        expected = quad(integrand, -1.0, 1.0, limit=200, epsabs=1e-13, epsrel=1e-13)[0]
        assert smooth_abs_integral(raw_weight, p4)[0] == pytest.approx(expected, rel=1e-8)

    def test_oscillatory_part_near_one(self):
        points = zeros_of_f(1.0, 1.3)
        expected = quad(lambda x: abs(f(x)), 1.0, 1.3, points=points, limit=500, epsabs=1e-13, epsrel=1e-13)[0]
        value, _ = oscillatory_abs_integral(one, zero, 1.0, 1.3)
        assert value == pytest.approx(expected, rel=1e-8)

    def test_oscillatory_part_with_kinks(self):
        def g(x):
            return 0.5 * np.ones_like(np.asarray(x, dtype=float))
        expected = quad(lambda x: abs(f(x) - 0.5), 1.0, 1.2, limit=2000, epsabs=1e-12, epsrel=1e-12)[0]
        assert oscillatory_abs_integral(one, g, 1.0, 1.2)[0] == pytest.approx(expected, rel=1e-6)

    def test_oscillatory_part_needs_x_at_least_one(self):
        with pytest.raises(ParameterError):
            oscillatory_abs_integral(one, zero, 0.5, 1.5)
        with pytest.raises(ParameterError):
            oscillatory_abs_integral(one, zero, 1.5, 1.5)

    @pytest.mark.slow
    def test_corrected_distance_is_nonnegative(self):
        value, error = abs_integral(mapped_weight, p4)
        assert value > 0
        assert error < 1e-6 * value


class TestReport:

    def test_unknown_mode(self):
        with pytest.raises(ParameterError):
            oscillating_example("exact")

    @pytest.mark.slow
    def test_literal_mode(self):
        report = oscillating_example("literal")
        rows = {row.name: row for row in report.rows}
        assert all(row.corrected is None for row in report.rows)
        # the weight formula is negative beyond x = 1, which drives the piecewise quartic's value below zero
        assert rows["piecewise_quartic"].literal < 0
        for row in report.rows:
            assert row.mismatch == (abs(row.literal - row.printed_value) > 1e-3 * abs(row.printed_value))
        assert rows["p4"].convex and not rows["piecewise_quartic"].convex

    @pytest.mark.slow
    def test_both_modes_and_round_trip(self):
        report = oscillating_example("both")
        assert all(row.corrected >= 0 and row.literal is not None for row in report.rows)
        header, rows = report.table()
        assert len(rows) == len(report.rows) + 2
        assert header[0] == "name" and rows[-1][0] == "I_1"
        restored = OscillatingExampleReport._from_dict(report._to_dict())
        assert restored.rows == report.rows
