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
Module containing the built-in family of test functions, each with the inflection points it is coconvex with
respect to and the interval it lives on.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
from ..shape import InflectionPartition
from .expressions import Expression


@dataclass(frozen=True)
class RegisteredFunction:

    """
    A named test function.

    :param name: registry name
    :param text: the expression text
    :param inflections: inflection points, in the coordinates of the interval
    :param interval: the interval the function is studied on
    :param description: one-line description
    """

    name: str
    text: str
    inflections: Sequence[float] = ()
    interval: tuple = (-1.0, 1.0)
    description: str = ""

    @property
    def expression(self) -> Expression:
        return Expression(self.text)

    @property
    def partition(self) -> InflectionPartition:
        return InflectionPartition.on_interval(self.inflections, self.interval)


#: inflection points listed for tan(cos(exp(x^4))) on [-1, 2]
OSCILLATING_INFLECTIONS = (1.92, 1.76, 1.68, 1.52, 1.44, 1.36, 1.28, 1.12, 1.0)

REGISTRY = {entry.name: entry for entry in [
    RegisteredFunction("neg_sin_pi", "-sin(pi*x)", (0.0,), description="analytic, concave then convex"),
    RegisteredFunction("cubic", "x^3", (0.0,), description="cubic with inflection at 0"),
    RegisteredFunction("quintic", "x^5-x", (0.0,), description="quintic with inflection at 0"),
    RegisteredFunction("shifted_cubic_0", "(x-0)^3", (0.0,), description="cubic with inflection at 0"),
    RegisteredFunction("shifted_cubic_0.5", "(x-0.5)^3", (0.5,), description="cubic with inflection at 0.5"),
    RegisteredFunction("shifted_cubic_-0.5", "(x+0.5)^3", (-0.5,), description="cubic with inflection at -0.5"),
    RegisteredFunction("signed_quartic", "x^3*abs(x)", (0.0,),
                       description="C2 piecewise quartic x^4 sign(x), inflection at 0"),
    RegisteredFunction("tan_cos_exp", "tan(cos(exp(x^4)))", OSCILLATING_INFLECTIONS, (-1.0, 2.0),
                       description="rapidly oscillating example on [-1, 2]"),
]}

#: the family the estimate checks run over by default
FIXTURE_FAMILY = ("neg_sin_pi", "cubic", "quintic", "shifted_cubic_0", "shifted_cubic_0.5", "shifted_cubic_-0.5",
                  "signed_quartic")


def lookup(name_or_text: str) -> RegisteredFunction:
    """
    Resolves a function spec: a registry name, or otherwise an expression (which is parsed to check it), with no
    inflection points on [-1, 1].

    :param name_or_text: registry name or expression text
    """
    if name_or_text in REGISTRY:
        return REGISTRY[name_or_text]
    Expression(name_or_text)
    return RegisteredFunction(name_or_text, name_or_text)
