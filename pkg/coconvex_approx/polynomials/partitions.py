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
from typing import Sequence
import numpy as np
from expenvelope.envelope import SavesToJSON
from ..utilities import DomainError, ParameterError, multi_option_function
from .chebyshev import ChebyshevPolynomial

_CONTINUITY_CLASSES = ("C0", "C1", None)


class ChebyshevPartition:

    """
    The Chebyshev partition of [-1, 1] into n intervals, with knots t_j = -cos(j pi / n), j = 0, ..., n.

    :param n: number of intervals
    """

    def __init__(self, n: int):
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
            raise DomainError("The Chebyshev partition needs a positive integer number of intervals (got {})."
                              .format(n))
        self.n = int(n)
        # sin(pi (2j - n) / (2n)) == -cos(j pi / n), but exactly antisymmetric in j <-> n - j
        j = np.arange(self.n + 1)
        knots = np.sin(np.pi * (2 * j - self.n) / (2 * self.n))
        knots[0], knots[-1] = -1.0, 1.0
        knots.flags.writeable = False
        self.knots = knots

    @property
    def mesh_norm(self) -> float:
        """Length of the largest interval (attained by the interval(s) nearest the center)."""
        return float(np.max(np.diff(self.knots)))

    def intervals(self) -> list:
        return list(zip(self.knots[:-1], self.knots[1:]))

    def __len__(self):
        return self.n

    def __repr__(self):
        return "ChebyshevPartition({})".format(self.n)


@multi_option_function
def chebyshev_knots(n: int) -> ChebyshevPartition:
    """
    Builds the Chebyshev partition with n intervals, or a list of partitions when given a list of interval counts.

    :param n: number of intervals (n >= 1), or a list or tuple of them
    """
    return ChebyshevPartition(n)


def _knot_array(knots) -> np.ndarray:
    if isinstance(knots, ChebyshevPartition):
        return knots.knots
    knots = np.array(knots, dtype=float)
    if knots.ndim != 1 or len(knots) < 2 or not np.all(np.diff(knots) > 0):
        raise ParameterError("Knots must form a strictly increasing sequence of at least two points.")
    return knots


class PiecewisePolynomial(SavesToJSON):

    """
    A piecewise polynomial on an increasing knot sequence x_0 < ... < x_N, with one Chebyshev polynomial per interval
    [x_j, x_{j+1}] (each expanded in the Chebyshev basis of its own interval). The continuity class is a declaration
    that :func:`piecewise_continuity_check` verifies.

    :param knots: a :class:`ChebyshevPartition` or an increasing sequence of knots
    :param pieces: one polynomial per interval; each must live on its interval
    :param continuity_class: "C0", "C1" or None (no declared smoothness, e.g. for derivatives of C0 splines)
    """

    def __init__(self, knots, pieces: Sequence[ChebyshevPolynomial], continuity_class: str | None = "C0"):
        self.knots = _knot_array(knots)
        if len(pieces) != len(self.knots) - 1:
            raise ParameterError("Expected {} pieces for {} knots, got {}."
                                 .format(len(self.knots) - 1, len(self.knots), len(pieces)))
        for piece, (lo, hi) in zip(pieces, zip(self.knots[:-1], self.knots[1:])):
            if not np.allclose(piece.domain, (lo, hi), rtol=0, atol=1e-14 * (1 + abs(hi) + abs(lo))):
                raise ParameterError("Piece on {} does not live on its interval [{}, {}].".format(piece.domain, lo, hi))
        if continuity_class not in _CONTINUITY_CLASSES:
            raise ParameterError("Unknown continuity class {}.".format(continuity_class))
        self.pieces = tuple(pieces)
        self.continuity_class = continuity_class

    @classmethod
    def from_local_coefficients(cls, knots, coefficient_rows, continuity_class="C0") -> PiecewisePolynomial:
        """
        Builds a piecewise polynomial from the Chebyshev coefficients of each piece in the local variable of its
        interval.

        :param knots: a :class:`ChebyshevPartition` or an increasing sequence of knots
        :param coefficient_rows: one coefficient sequence per interval
        :param continuity_class: declared continuity class
        """
        knots = _knot_array(knots)
        pieces = [ChebyshevPolynomial(row, (lo, hi)) for row, lo, hi in zip(coefficient_rows, knots[:-1], knots[1:])]
        return cls(knots, pieces, continuity_class)

    @classmethod
    def from_global(cls, polynomial: ChebyshevPolynomial, knots, continuity_class="C1") -> PiecewisePolynomial:
        """
        Splits a single polynomial at the given knots (which must lie in its domain).

        :param polynomial: the polynomial
        :param knots: a :class:`ChebyshevPartition` or an increasing sequence of knots
        :param continuity_class: declared continuity class
        """
        knots = _knot_array(knots)
        return cls(knots, [polynomial.restricted_to(lo, hi) for lo, hi in zip(knots[:-1], knots[1:])],
                   continuity_class)

    @property
    def order(self) -> int:
        """The order k: every piece has degree at most k - 1."""
        return max(piece.degree_bound for piece in self.pieces) + 1

    @property
    def interval_count(self) -> int:
        return len(self.pieces)

    def piece_index(self, x) -> np.ndarray:
        """Index of the interval containing each point (interior knots belong to the interval on their right)."""
        return np.clip(np.searchsorted(self.knots, x, side="right") - 1, 0, len(self.pieces) - 1)

    def __call__(self, x):
        x_array = np.asarray(x, dtype=float)
        span = self.knots[-1] - self.knots[0]
        if np.any(x_array < self.knots[0] - 1e-12 * span) or np.any(x_array > self.knots[-1] + 1e-12 * span):
            raise DomainError("Evaluation point outside of [{}, {}].".format(self.knots[0], self.knots[-1]))
        flat = x_array.ravel()
        indices = self.piece_index(flat)
        out = np.empty_like(flat)
        for j in np.unique(indices):
            mask = indices == j
            lo, hi = self.pieces[j].domain
            out[mask] = self.pieces[j](np.clip(flat[mask], lo, hi))
        return float(out[0]) if x_array.ndim == 0 else out.reshape(x_array.shape)

    def derivative(self, m: int = 1) -> PiecewisePolynomial:
        """Piecewise m-th derivative. Differentiating lowers the declared continuity class by m."""
        classes = ["C1", "C0", None]
        start = classes.index(self.continuity_class)
        return PiecewisePolynomial(self.knots, [piece.derivative(m) for piece in self.pieces],
                                   classes[min(start + m, 2)])

    def knot_jumps(self, m: int = 0) -> np.ndarray:
        """Jumps p^(m)_{j+1}(x_{j+1}) - p^(m)_j(x_{j+1}) of the m-th derivative at the interior knots."""
        derivatives = [piece.derivative(m) for piece in self.pieces]
        return np.array([derivatives[j + 1](self.knots[j + 1]) - derivatives[j](self.knots[j + 1])
                         for j in range(len(self.pieces) - 1)])

    # ------------------------------------- Loading / Saving ---------------------------------------

    def _to_dict(self):
        return {
            "knots": [float(x) for x in self.knots],
            "pieces": [[float(c) for c in piece.coeffs] for piece in self.pieces],
            "continuity_class": self.continuity_class
        }

    @classmethod
    def _from_dict(cls, json_dict):
        return cls.from_local_coefficients(json_dict["knots"], json_dict["pieces"], json_dict["continuity_class"])

    def __repr__(self):
        return "PiecewisePolynomial(knots={}, order={}, continuity_class={})".format(
            list(self.knots), self.order, self.continuity_class)


def piecewise_continuity_check(s: PiecewisePolynomial, tol: float = 1e-9) -> dict:
    """
    Checks the matching conditions at the interior knots of a piecewise polynomial. At each knot the tolerance is
    tol * (1 + largest magnitude of the one-sided values being compared).

    :param s: the piecewise polynomial
    :param tol: relative matching tolerance
    :return: dictionary with boolean entries "C0" (values match) and "C1" (values and first derivatives match);
        "declared" holds the entry for the piecewise polynomial's own continuity class (True when it declares none)
    """
    def _matches(m):
        derivatives = [piece.derivative(m) for piece in s.pieces]
        for j in range(len(s.pieces) - 1):
            knot = s.knots[j + 1]
            left, right = derivatives[j](knot), derivatives[j + 1](knot)
            if abs(left - right) > tol * (1 + max(abs(left), abs(right))):
                return False
        return True

    c0 = _matches(0)
    c1 = c0 and _matches(1)
    result = {"C0": c0, "C1": c1}
    result["declared"] = True if s.continuity_class is None else result[s.continuity_class]
    return result
