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
Module containing the statistical Korovkin experiments. The degrees of best unconstrained and shape-constrained
approximation are checked for joint A-statistical nullity (for the three Korovkin test functions and a user family),
and the summed moduli of the test functions are checked for an A-statistical limit as t = 2/(n + 1) tends to 0.
Fejer means are also measured against the function they approximate.
"""

from __future__ import annotations
from typing import Callable, Mapping
import logging
import math
import numpy as np
from expenvelope.envelope import SavesToJSON
from ..polynomials import ChebyshevPolynomial
from ..shape import InflectionPartition
from ..smoothness import ModulusSpec, StepMode, dt_modulus_curve
from ..solvers import ShapeConstraint, degree_sequences
from ..utilities import ParameterError, evaluate_function
from ..weighted_spaces import WeightedNormParams
from .fourier import OperatorSpec, fourier_coeffs, fejer_apply
from .summability import SummabilityMatrix, st_A_limit, DENSITY_THRESHOLD

#: sequence terms at least this far from the candidate limit count as exceptional
DEFAULT_EPS = 1e-6


def korovkin_test_functions(spec: OperatorSpec | None = None, interval=(-1.0, 1.0)) -> dict:
    """
    The three test functions f_1 = 1, f_2 = (x - x#)/(x* - x_i) and f_3 = (x - x*)/(x_i - x#), as polynomials on the
    given interval, with the nodes taken from the operator spec.

    :param spec: operator spec holding the nodal parameters (default nodes -1, 0, 1)
    :param interval: interval the polynomials live on
    :return: dictionary from the names "f1", "f2", "f3" to the polynomials
    """
    spec = OperatorSpec.fejer() if spec is None else spec
    if spec.x_star == spec.x_i or spec.x_i == spec.x_sharp:
        raise ParameterError("The test functions have a zero denominator for nodes ({}, {}, {})."
                             .format(spec.x_star, spec.x_i, spec.x_sharp))
    first = 1 / (spec.x_star - spec.x_i)
    second = 1 / (spec.x_i - spec.x_sharp)
    return {
        "f1": ChebyshevPolynomial.from_power_basis([1.0, 0.0], interval),
        "f2": ChebyshevPolynomial.from_power_basis([-spec.x_sharp * first, first], interval),
        "f3": ChebyshevPolynomial.from_power_basis([-spec.x_star * second, second], interval)
    }


class JointNullityReport(SavesToJSON):

    """
    Per-function outcome of :func:`joint_nullity_experiment`: the two degree sequences and their A-statistical
    verdicts against the limit 0.

    :param rows: list of dictionaries with keys name, E, E2, verdict_E, verdict_E2, jointly_null, consistent
    :param matrix: description of the summability matrix used
    :param eps: tolerance of the statistical limits
    """

    def __init__(self, rows: list, matrix: str, eps: float):
        self.rows = rows
        self.matrix = matrix
        self.eps = eps

    @property
    def all_consistent(self) -> bool:
        return all(row["consistent"] for row in self.rows)

    def table(self) -> tuple:
        header = ("name", "E_N", "E2_N", "verdict_E", "verdict_E2", "jointly_null", "consistent")
        return header, [(row["name"], row["E"][-1], row["E2"][-1], row["verdict_E"], row["verdict_E2"],
                         row["jointly_null"], row["consistent"]) for row in self.rows]

    def _to_dict(self):
        return {"rows": self.rows, "matrix": self.matrix, "eps": self.eps}

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(json_dict["rows"], json_dict["matrix"], json_dict["eps"])

    def __repr__(self):
        return "JointNullityReport({} functions, matrix={}, all consistent={})".format(
            len(self.rows), self.matrix, self.all_consistent)


def joint_nullity_experiment(family: Mapping[str, Callable], Y: InflectionPartition, A: SummabilityMatrix | None,
                             norm: WeightedNormParams, N: int, spec: OperatorSpec | None = None,
                             eps: float = DEFAULT_EPS, threshold: float = DENSITY_THRESHOLD) -> JointNullityReport:
    """
    For the three Korovkin test functions and each member of the family, computes the degrees of best unconstrained
    and coconvex (convex when Y is empty) approximation for n = 1..N and decides for each sequence whether its
    A-statistical limit is 0. The two sequences are reported jointly null when both are accepted, and consistent when
    the two verdicts agree.

    :param family: named functions on the norm's interval
    :param Y: the inflection partition
    :param A: summability matrix of width at most N (default: Cesaro of width N)
    :param norm: the weighted norm
    :param N: number of degrees
    :param spec: nodal parameters of the test functions
    :param eps: tolerance of the statistical limit
    :param threshold: density threshold of the statistical limit
    """
    A = SummabilityMatrix.cesaro(N) if A is None else A
    if A.width > N:
        raise ParameterError("The matrix width {} exceeds the number of degrees {}.".format(A.width, N))
    constraint = ShapeConstraint.coconvex(Y) if Y.s else ShapeConstraint.convex()
    interval = (norm.interval.a, norm.interval.b)
    functions = dict(korovkin_test_functions(spec, interval))
    functions.update(family)

    rows = []
    for name, f in functions.items():
        sequences = degree_sequences(f, constraint, norm, range(1, N + 1))
        E = [free.error for _, free, _ in sequences]
        E2 = [shaped.error for _, _, shaped in sequences]
        verdict_E = st_A_limit(E, A, 0.0, eps, threshold).verdict
        verdict_E2 = st_A_limit(E2, A, 0.0, eps, threshold).verdict
        logging.info("{}: st_A-null verdicts {} (unconstrained) and {} (constrained)".format(name, verdict_E,
                                                                                            verdict_E2))
        rows.append({
            "name": name, "E": E, "E2": E2, "verdict_E": verdict_E, "verdict_E2": verdict_E2,
            "jointly_null": verdict_E == verdict_E2 == "ACCEPT", "consistent": verdict_E == verdict_E2
        })
    return JointNullityReport(rows, repr(A), eps)


class ModulusSumReport(SavesToJSON):

    """
    Outcome of :func:`modulus_sum_experiment`.

    :param i: the order i (the moduli have order and weight power i - 1)
    :param t: the steps t_n = 2/(n + 1)
    :param sums: the summed moduli at each t_n
    :param verdict: A-statistical verdict for the limit 0
    """

    def __init__(self, i: int, t, sums, verdict: str):
        self.i = i
        self.t = [float(v) for v in t]
        self.sums = [float(v) for v in sums]
        self.verdict = verdict

    def table(self) -> tuple:
        return ("t", "sum", "verdict"), [(t, s, self.verdict) for t, s in zip(self.t, self.sums)]

    def _to_dict(self):
        return {"i": self.i, "t": self.t, "sums": self.sums, "verdict": self.verdict}

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(json_dict["i"], json_dict["t"], json_dict["sums"], json_dict["verdict"])


def modulus_sum_experiment(i: int, A: SummabilityMatrix | None = None, N: int = 64,
                           spec: OperatorSpec | None = None, p: float = math.inf,
                           eps: float = DEFAULT_EPS) -> ModulusSumReport:
    """
    The sum over the three test functions f_v of the Ditzian-Totik moduli omega^phi_{i-1, i-1}(f_v^(i-1), t) along
    t_n = 2/(n + 1), n = 1..N, and its A-statistical limit as t tends to 0 (candidate limit 0).

    :param i: order, at least 2
    :param A: summability matrix (default: Cesaro of width N)
    :param N: number of steps
    :param spec: nodal parameters of the test functions
    :param p: exponent of the moduli
    :param eps: tolerance of the statistical limit
    """
    if i < 2:
        raise ParameterError("The modulus order i - 1 must be at least 1, so i >= 2.")
    A = SummabilityMatrix.cesaro(N) if A is None else A
    t = 2.0 / (np.arange(1, N + 1) + 1)
    modulus = ModulusSpec(k=i - 1, r=float(i - 1), step_mode=StepMode.PHI, p=p)
    sums = np.zeros(N)
    for f in korovkin_test_functions(spec).values():
        sums += dt_modulus_curve(f.derivative(i - 1), modulus, t)
    return ModulusSumReport(i, t, sums, st_A_limit(sums, A, 0.0, eps).verdict)


class FejerConvergenceReport(SavesToJSON):

    """
    Sup-norm distances ||F_n f - f|| on a grid over [-pi, pi], for several n.

    :param ns: the orders n
    :param errors: the distances, in the order of ns
    """

    def __init__(self, ns, errors):
        self.ns = [int(n) for n in ns]
        self.errors = [float(e) for e in errors]

    @property
    def decreasing(self) -> bool:
        return all(b <= a for a, b in zip(self.errors, self.errors[1:]))

    def table(self) -> tuple:
        return ("n", "sup_error"), list(zip(self.ns, self.errors))

    def _to_dict(self):
        return {"ns": self.ns, "errors": self.errors}

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(json_dict["ns"], json_dict["errors"])


def fejer_convergence(f: Callable, ns, grid: int = 2049) -> FejerConvergenceReport:
    """
    Measures how fast the Fejer means of a 2 pi-periodic function approach it: for each n the largest deviation
    |F_n(f; x) - f(x)| over an equispaced grid of [-pi, pi].

    :param f: the function
    :param ns: orders n >= 1
    :param grid: number of grid points
    """
    ns = sorted(int(n) for n in ns)
    x = np.linspace(-math.pi, math.pi, grid)
    values = evaluate_function(f, x)
    coeffs = fourier_coeffs(f, ns[-1])
    errors = [float(np.max(np.abs(fejer_apply(coeffs, n, x) - values))) for n in ns]
    return FejerConvergenceReport(ns, errors)
