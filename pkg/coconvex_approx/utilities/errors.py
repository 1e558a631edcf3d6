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

from typing import Sequence


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation (e.g. x outside [-1, 1], or n = 0)."""


class ParameterError(ValueError):
    """
    Raised when a collection of parameters is inconsistent, for instance Jacobi exponents outside of J_p, a mesh that
    is too coarse for the requested difference order, or inflection points that are too close together.
    """


class EvaluationError(ArithmeticError):
    """Raised when a user-supplied function produces non-finite values where finite values are required."""


class ExpressionSyntaxError(ParameterError):

    """
    Raised when a function expression cannot be parsed.

    :param message: description of the problem
    :param text: the expression text being parsed
    :param position: character offset at which the problem was detected
    :param expected: the tokens that would have been acceptable at that position
    """

    def __init__(self, message: str, text: str, position: int, expected: Sequence[str] = ()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        details = "{} at position {} of \"{}\"".format(message, position, text)
        if self.expected:
            details += " (expected one of: {})".format(", ".join(self.expected))
        super().__init__(details)


class SolverError(ArithmeticError):
    """Raised when an optimization backend fails to return any solution at all."""
