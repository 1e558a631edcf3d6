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

from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
import numpy as np
from numpy.polynomial import polynomial as power_series
from ..polynomials import ChebyshevPolynomial
from ..utilities import AffineMap, ParameterError

#: inflection points closer together than this are rejected
MIN_SEPARATION = 1e-6


@dataclass(frozen=True)
class Segment:
    lo: float
    hi: float
    #: +1 where the function must be convex, -1 where it must be concave
    sign: int


class InflectionPartition:

    """
    The points y_1 > y_2 > ... > y_s inside (-1, 1) at which a coconvex function changes convexity, with the
    sentinels y_0 = 1 and y_{s+1} = -1. Segment i is [y_{i+1}, y_i]; by default the rightmost segment [y_1, 1] is
    convex and convexity alternates leftwards. An empty partition (s = 0) means plain convexity.

    :param points: the inflection points (any order; they are sorted decreasingly)
    :param rightmost_convex: if False, the roles of even and odd segments are exchanged
    """

    def __init__(self, points: Sequence[float] = (), rightmost_convex: bool = True):
        points = sorted((float(y) for y in points), reverse=True)
        if any(not -1 < y < 1 for y in points):
            raise ParameterError("Inflection points must lie strictly inside (-1, 1) (got {}).".format(points))
        if any(a - b < MIN_SEPARATION for a, b in zip(points, points[1:])):
            raise ParameterError("Inflection points must be at least {} apart (got {}).".format(MIN_SEPARATION,
                                                                                               points))
        self.points = tuple(points)
        self.rightmost_convex = rightmost_convex

    @classmethod
    def on_interval(cls, points: Sequence[float], interval: Sequence[float], rightmost_convex: bool = True) \
            -> InflectionPartition:
        """
        Builds the partition from points given on an interval [a, b], mapping them to [-1, 1].

        :param points: inflection points inside (a, b)
        :param interval: the interval [a, b]
        :param rightmost_convex: orientation, as in the constructor
        """
        affine_map = AffineMap(*interval)
        return cls([float(affine_map.from_interval(y)) for y in points], rightmost_convex)

    @property
    def s(self) -> int:
        return len(self.points)

    def with_sentinels(self) -> tuple:
        return (1.0,) + self.points + (-1.0,)

    def segment_sign(self, i: int) -> int:
        sign = 1 if i % 2 == 0 else -1
        return sign if self.rightmost_convex else -sign

    def segments(self) -> list:
        """Segments [y_{i+1}, y_i], i = 0..s, with the sign that the second derivative must have on each."""
        ys = self.with_sentinels()
        return [Segment(ys[i + 1], ys[i], self.segment_sign(i)) for i in range(self.s + 1)]

    def flipped(self) -> InflectionPartition:
        """The same points with convex and concave segments exchanged."""
        return InflectionPartition(self.points, not self.rightmost_convex)

    def sign_function(self, x):
        """+1 / -1 according to whether the second derivative must be nonnegative / nonpositive at x."""
        x = np.asarray(x, dtype=float)
        # number of inflection points strictly to the right of x equals the segment index
        index = np.sum(np.asarray(self.points)[:, None] > x.ravel()[None, :], axis=0) if self.s else \
            np.zeros(x.size, dtype=int)
        signs = np.where(index % 2 == 0, 1, -1) * (1 if self.rightmost_convex else -1)
        return signs.reshape(x.shape)

    def sign_polynomial(self) -> ChebyshevPolynomial:
        """
        The polynomial g(u) = +-(u - y_1)...(u - y_s), signed so that g >= 0 exactly on the segments where the
        second derivative must be nonnegative.
        """
        power = power_series.polyfromroots(self.points) if self.s else np.array([1.0])
        g = ChebyshevPolynomial.from_power_basis(power)
        return g if self.rightmost_convex else -g

    def __eq__(self, other):
        return isinstance(other, InflectionPartition) and self.points == other.points and \
            self.rightmost_convex == other.rightmost_convex

    def __hash__(self):
        return hash((self.points, self.rightmost_convex))

    def __repr__(self):
        if self.rightmost_convex:
            return "InflectionPartition({})".format(list(self.points))
        return "InflectionPartition({}, rightmost_convex=False)".format(list(self.points))
