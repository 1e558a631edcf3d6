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
from coconvex_approx.harness import Expression, FIXTURE_FAMILY, REGISTRY, lookup, tokenize
from coconvex_approx.shape import InflectionPartition
from coconvex_approx.utilities import ExpressionSyntaxError, ParameterError


class TestEvaluation:

    @pytest.mark.parametrize("text, x, expected", [
        ("2*3+4", 0.0, 10.0),
        ("1-2-3", 0.0, -4.0),
        ("8/2/2", 0.0, 2.0),
        ("2^3^2", 0.0, 512.0),
        ("-x^2", 3.0, -9.0),
        ("(-x)^2", 3.0, 9.0),
        ("2*-x", 1.5, -3.0),
        ("+x", 2.0, 2.0),
        ("sin(pi/2)", 0.0, 1.0),
        ("ln(e)", 0.0, 1.0),
        ("x^3*abs(x)", -2.0, -16.0),
        ("1.5e1 + .5", 0.0, 15.5),
    ])
    def test_values(self, text, x, expected):
        assert Expression(text)(x) == pytest.approx(expected)

    def test_vectorized(self):
        np.testing.assert_allclose(Expression("x^2")(np.array([1.0, 2.0])), [1.0, 4.0])
        np.testing.assert_allclose(Expression("1")(np.array([1.0, 2.0])), [1.0, 1.0])

    def test_tokens(self):
        tokens = tokenize("sin(x) ^ 2")
        assert [t.kind for t in tokens] == ["name", "op", "name", "op", "op", "number", "end"]
        assert tokens[4].position == 7


class TestDerivatives:

    @pytest.mark.parametrize("text, m, x, expected", [
        ("x^3", 1, 2.0, 12.0),
        ("x^3", 2, 2.0, 12.0),
        ("x^3", 4, 2.0, 0.0),
        ("abs(x)", 1, -2.0, -1.0),
        ("exp(x^2)", 1, 1.0, 2 * math.e),
        ("2^x", 1, 1.0, 2 * math.log(2)),
        ("x^x", 1, 1.0, 1.0),
        ("sqrt(x)", 1, 4.0, 0.25),
        ("tan(x)", 1, 0.0, 1.0),
        ("1/x", 1, 2.0, -0.25),
        ("-sin(pi*x)", 2, 0.5, math.pi ** 2),
        ("ln(x)", 1, 4.0, 0.25),
    ])
    def test_exact_derivatives(self, text, m, x, expected):
        assert Expression(text).derivative(m)(x) == pytest.approx(expected)

    def test_zeroth_derivative_is_itself(self):
        expression = Expression("x^2")
        assert expression.derivative(0) is expression

    def test_constants_fold(self):
        assert str(Expression("3*x").derivative()) == "3.0"


class TestSyntaxErrors:

    @pytest.mark.parametrize("text, position, expected", [
        ("2x", 1, ")"),
        ("sin x", 4, "("),
        ("(x+1", 4, ")"),
        ("x+", 2, "x"),
        ("foo(x)", 0, "sin"),
        ("x $ 1", 2, "+"),
    ])
    def test_position_and_expected_tokens(self, text, position, expected):
        with pytest.raises(ExpressionSyntaxError) as info:
            Expression(text)
        assert info.value.position == position
        assert expected in info.value.expected
        assert info.value.text == text

    def test_is_a_parameter_error(self):
        with pytest.raises(ParameterError):
            Expression("x)")
        with pytest.raises(ValueError):
            Expression("")

    def test_sign_is_not_public(self):
        with pytest.raises(ExpressionSyntaxError):
            Expression("sign(x)")


class TestRegistry:

    def test_family_is_registered(self):
        assert all(name in REGISTRY for name in FIXTURE_FAMILY)
        for name in FIXTURE_FAMILY:
            assert REGISTRY[name].interval == (-1.0, 1.0)

    def test_lookup_by_name(self):
        entry = lookup("shifted_cubic_0.5")
        assert entry.partition == InflectionPartition([0.5])
        assert entry.expression(1.5) == pytest.approx(1.0)

    def test_lookup_expression(self):
        entry = lookup("x^2+1")
        assert entry.inflections == ()
        assert entry.partition.s == 0
        with pytest.raises(ExpressionSyntaxError):
            lookup("x^^2")

    def test_oscillating_entry(self):
        entry = REGISTRY["tan_cos_exp"]
        assert entry.interval == (-1.0, 2.0)
        assert entry.partition.s == 9
        assert entry.partition.points[-1] == pytest.approx(1 / 3)

    def test_registered_functions_are_coconvex(self):
        from coconvex_approx.shape import is_coconvex_function
        for name in FIXTURE_FAMILY:
            entry = REGISTRY[name]
            assert is_coconvex_function(entry.expression.derivative(2), entry.partition), name
