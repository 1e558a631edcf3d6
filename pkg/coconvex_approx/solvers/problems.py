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
Module containing the problem and solution types of the best-approximation solvers: the :class:`ShapeConstraint`
imposed on the approximant, the :class:`ApproxProblem` bundling a target with a degree, a norm and a constraint, and
the :class:`ApproxSolution` returned by every solve.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence
import math
from numbers import Integral
from expenvelope.envelope import SavesToJSON
from ..polynomials import ChebyshevPolynomial
from ..shape import InflectionPartition
from ..utilities import DomainError, ParameterError
from ..weighted_spaces import WeightedNormParams

#: minimum number of sampled shape-constraint points per segment
MIN_CONSTRAINT_POINTS = 64
#: default optimality tolerance of the solvers
SOLVER_TOLERANCE = 1e-8


class ShapeKind(Enum):
    NONE = "none"
    CONVEX = "convex"
    COCONVEX = "coconvex"


@dataclass(frozen=True)
class ShapeConstraint:

    """
    The shape an approximant must have: none, convex, or coconvex with respect to an inflection partition.

    :param kind: the kind of constraint
    :param partition: the inflection partition (only for COCONVEX)
    """

    kind: ShapeKind = ShapeKind.NONE
    partition: InflectionPartition | None = None

    def __post_init__(self):
        if self.kind is ShapeKind.COCONVEX and self.partition is None:
            raise ParameterError("A coconvex constraint needs an inflection partition.")
        if self.kind is not ShapeKind.COCONVEX and self.partition is not None:
            raise ParameterError("Only coconvex constraints carry an inflection partition.")

    @classmethod
    def none(cls) -> ShapeConstraint:
        return cls()

    @classmethod
    def convex(cls) -> ShapeConstraint:
        return cls(ShapeKind.CONVEX)

    @classmethod
    def coconvex(cls, partition: InflectionPartition | Sequence[float]) -> ShapeConstraint:
        if not isinstance(partition, InflectionPartition):
            partition = InflectionPartition(partition)
        return cls(ShapeKind.COCONVEX, partition)

    @classmethod
    def parse(cls, name: str, inflections: Sequence[float] = ()) -> ShapeConstraint:
        """
        Builds a constraint from its name ("none", "convex" or "coconvex") and, for coconvexity, the inflection points.
        A coconvex constraint with no inflection points is the same as convexity.
        """
        kind = ShapeKind(name.lower())
        if kind is ShapeKind.COCONVEX:
            return cls.coconvex(inflections) if len(inflections) > 0 else cls.convex()
        return cls(kind)

    @property
    def inflections(self) -> InflectionPartition:
        """The partition whose segment signs the second derivative must follow (empty for plain convexity)."""
        return self.partition if self.partition is not None else InflectionPartition()

    @property
    def is_shape_constrained(self) -> bool:
        return self.kind is not ShapeKind.NONE

    def __repr__(self):
        if self.kind is ShapeKind.COCONVEX:
            return "ShapeConstraint.coconvex({})".format(list(self.partition.points))
        return "ShapeConstraint.{}()".format(self.kind.value)


class SolveStatus(Enum):
    #: the discretized problem was solved and the shape (if any) certified
    OPTIMAL = "ok"
    #: the iterative solver stopped before converging; the best iterate is returned
    DEGRADED = "degraded"
    #: the shape could not be certified; the constraint residuals say by how much it fails
    UNCERTIFIED = "uncertified"


@dataclass
class ApproxProblem:

    """
    A best-approximation instance: approximate ``target`` on the norm's interval by polynomials of degree at most
    n - 1 (the space pi_n) in the weighted norm, subject to a shape constraint.

    :param target: the function to approximate, on ``norm.interval``
    :param n: dimension of the polynomial space
    :param norm: the weighted norm (p >= 1)
    :param constraint: the shape constraint
    :param constraint_grid: number of sampled constraint points per segment (default max(4 n, 64))
    :param solver_tol: optimality tolerance
    """

    target: Callable
    n: int
    norm: WeightedNormParams = field(default_factory=WeightedNormParams)
    constraint: ShapeConstraint = field(default_factory=ShapeConstraint)
    constraint_grid: int | None = None
    solver_tol: float = SOLVER_TOLERANCE

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, Integral) or self.n < 1:
            raise DomainError("The polynomial space dimension n must be a positive integer (got {}).".format(self.n))
        self.n = int(self.n)
        if self.norm.p < 1:
            raise ParameterError("Best approximation is only supported for p >= 1 (got p = {}).".format(self.norm.p))
        if self.constraint_grid is None:
            self.constraint_grid = max(4 * self.n, MIN_CONSTRAINT_POINTS)
        elif self.constraint_grid < 2:
            raise ParameterError("At least two constraint points per segment are needed.")
        if not self.solver_tol > 0:
            raise ParameterError("The solver tolerance must be positive.")

    @property
    def p(self) -> float:
        return self.norm.p

    @property
    def inflections(self) -> InflectionPartition:
        return self.constraint.inflections


class ApproxSolution(SavesToJSON):

    """
    The computed optimum of an :class:`ApproxProblem`.

    :param polynomial: the best approximant found (on the norm's interval)
    :param error: the weighted norm of target - polynomial, recomputed by the norm evaluation
    :param discretization_error_estimate: change of the discretized objective when the quadrature order (or sup grid)
        is doubled
    :param constraint_residual: exact minimum of the signed second derivative on each segment, right to left (empty
        for unconstrained problems)
    :param iterations: solver iterations (IRLS steps, certification rounds for the direct kernels)
    :param status: how far the result can be trusted
    """

    def __init__(self, polynomial: ChebyshevPolynomial, error: float, discretization_error_estimate: float = 0.0,
                 constraint_residual: Sequence[float] = (), iterations: int = 1,
                 status: SolveStatus = SolveStatus.OPTIMAL):
        self.polynomial = polynomial
        self.error = float(error)
        self.discretization_error_estimate = float(discretization_error_estimate)
        self.constraint_residual = tuple(float(r) for r in constraint_residual)
        self.iterations = int(iterations)
        self.status = status

    @property
    def min_residual(self) -> float:
        return min(self.constraint_residual) if self.constraint_residual else math.inf

    # ------------------------------------- Loading / Saving ---------------------------------------

    def _to_dict(self):
        return {
            "polynomial": self.polynomial._to_dict(),
            "error": self.error,
            "discretization_error_estimate": self.discretization_error_estimate,
            "constraint_residual": list(self.constraint_residual),
            "iterations": self.iterations,
            "status": self.status.value
        }

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(ChebyshevPolynomial._from_dict(json_dict["polynomial"]), json_dict["error"],
                   json_dict.get("discretization_error_estimate", 0.0), json_dict.get("constraint_residual", ()),
                   json_dict.get("iterations", 1), SolveStatus(json_dict.get("status", "ok")))

    def __repr__(self):
        return "ApproxSolution(error={:.6g}, status={}, degree_bound={})".format(
            self.error, self.status.value, self.polynomial.degree_bound)
