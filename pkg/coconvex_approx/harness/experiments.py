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
Module containing the experiment drivers: degree tables of best unconstrained and shape-constrained approximation, the
empirical constants of the direct (Jackson-type) and inverse comparison estimates, and the spline Jackson check.
Every report can be written as CSV (via :func:`write_table`) or as JSON (via :class:`SavesToJSON`).
"""

from __future__ import annotations
from dataclasses import dataclass, asdict
from typing import Callable, Sequence, TextIO
import csv
import logging
import math
import numpy as np
from expenvelope.envelope import SavesToJSON
from ..polynomials import ChebyshevPartition
from ..smoothness import ModulusSpec, MeshPartition, StepMode, dt_modulus, weighted_dt_modulus
from ..solvers import SolveStatus, best_spline, degree_sequences, ShapeConstraint
from ..utilities import ParameterError, running_max, relative_variation
from ..weighted_spaces import WeightedNormParams, discretize_norm, weighted_lp_norm
from .config import ExperimentConfig

#: errors and norms below this are treated as zero when forming ratios
ZERO_TOLERANCE = 1e-12
#: relative variation below which an empirical constant counts as stable
STABILITY_LIMIT = 0.25
#: max / min below which a ratio column counts as bounded
BOUNDED_SPREAD = 10.0

DEGREE_TABLE_HEADER = ("n", "E_n", "E2_n", "nsig_E", "nsig_E2", "sup_E", "sup_E2", "ratio", "status")


# ------------------------------------------ Output helpers ---------------------------------------

def format_cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    return "" if value is None else str(value)


def write_table(header: Sequence[str], rows: Sequence[Sequence], file: TextIO):
    """
    Writes a header and rows as CSV, with floats printed to 12 significant digits.

    :param header: column names
    :param rows: the rows, in the order of the header
    :param file: a text stream opened with newline=""
    """
    writer = csv.writer(file, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])


def _safe_ratio(numerator: float, denominator: float) -> float:
    if denominator < ZERO_TOLERANCE:
        return math.nan if numerator < ZERO_TOLERANCE else math.inf
    return numerator / denominator


def _combined_status(*statuses: SolveStatus) -> str:
    for status in (SolveStatus.UNCERTIFIED, SolveStatus.DEGRADED):
        if status in statuses:
            return status.value
    return SolveStatus.OPTIMAL.value


# ------------------------------------------- Degree table ----------------------------------------

@dataclass
class ResultRow(SavesToJSON):

    """
    One row of a degree table.

    :param n: polynomial space dimension
    :param E: degree of best unconstrained approximation
    :param E2: degree of best convex / coconvex approximation
    :param nsig_E: n^sigma E
    :param nsig_E2: n^sigma E2
    :param sup_E: running maximum of nsig_E over the table so far
    :param sup_E2: running maximum of nsig_E2 over the table so far
    :param ratio: sup_E2 / sup_E (NaN or inf when sup_E vanishes, in which case the row is flagged)
    :param status: "ok", "degraded", "uncertified", or "indeterminate" for a vanishing denominator
    """

    n: int
    E: float
    E2: float
    nsig_E: float
    nsig_E2: float
    sup_E: float
    sup_E2: float
    ratio: float
    status: str

    @property
    def flagged(self) -> bool:
        return self.status != SolveStatus.OPTIMAL.value

    def values(self) -> tuple:
        return (self.n, self.E, self.E2, self.nsig_E, self.nsig_E2, self.sup_E, self.sup_E2, self.ratio,
                self.status)

    def _to_dict(self):
        return asdict(self)

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(**json_dict)


def rows_from_sequences(sequences: Sequence[tuple], sigma: float) -> list:
    """
    Builds degree table rows from the output of :func:`~coconvex_approx.solvers.degree_sequences`.

    :param sequences: list of (n, unconstrained solution, constrained solution)
    :param sigma: the exponent sigma
    """
    ns = [n for n, _, _ in sequences]
    E = [free.error for _, free, _ in sequences]
    E2 = [shaped.error for _, _, shaped in sequences]
    nsig_E = [n ** sigma * e for n, e in zip(ns, E)]
    nsig_E2 = [n ** sigma * e for n, e in zip(ns, E2)]
    rows = []
    for n, e, e2, a, b, sup_a, sup_b, (_, free, shaped) in zip(ns, E, E2, nsig_E, nsig_E2, running_max(nsig_E),
                                                               running_max(nsig_E2), sequences):
        ratio = _safe_ratio(sup_b, sup_a)
        status = _combined_status(free.status, shaped.status)
        if not math.isfinite(ratio) and status == SolveStatus.OPTIMAL.value:
            status = "indeterminate"
        rows.append(ResultRow(n, e, e2, a, b, sup_a, sup_b, ratio, status))
    return rows


def _sequences(cfg: ExperimentConfig, n_values) -> list:
    return degree_sequences(cfg.target, cfg.constraint, cfg.norm, n_values, cfg.solver_tol)


def degree_table(cfg: ExperimentConfig) -> list:
    """
    Tabulates the degrees of best unconstrained and shape-constrained approximation of the configured function for
    n = m, ..., N. Rows whose solves did not certify or converge are kept and flagged in their status.

    :param cfg: the experiment config
    :return: list of :class:`ResultRow`
    """
    rows = rows_from_sequences(_sequences(cfg, cfg.n_values), cfg.sigma)
    for row in rows:
        if row.flagged:
            logging.warning("Degree table row n = {} is flagged {}.".format(row.n, row.status))
    return rows


def write_degree_table(rows: Sequence[ResultRow], file: TextIO):
    write_table(DEGREE_TABLE_HEADER, [row.values() for row in rows], file)


class DegreeTable(SavesToJSON):

    """
    A degree table together with the settings it was computed with.

    :param config: the experiment config
    :param rows: the :class:`ResultRow` list
    """

    def __init__(self, config: ExperimentConfig, rows: Sequence[ResultRow]):
        self.config = config
        self.rows = list(rows)

    def table(self) -> tuple:
        return DEGREE_TABLE_HEADER, [row.values() for row in self.rows]

    def _to_dict(self):
        return {"config": self.config._to_dict(), "rows": [row._to_dict() for row in self.rows]}

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(ExperimentConfig._from_dict(json_dict["config"]),
                   [ResultRow._from_dict(row) for row in json_dict["rows"]])


# ---------------------------------------- Direct estimate ----------------------------------------

class RatioReport(SavesToJSON):

    """
    Outcome of :func:`ratio_experiment`.

    :param lhs: max of n^sigma E2_n over the admissible n in [m, N]
    :param rhs: max of n^sigma E_n over n in [1, N]
    :param c_emp: lhs / rhs (NaN when indeterminate)
    :param verdict: "ok" or "INDETERMINATE"
    :param stability: dictionary from N' in {N/2, 3N/4, N} to c_emp computed with N' in place of N
    :param stability_variation: relative variation of the stability values
    :param tail_variation: relative variation of c_emp(N') over the last quartile of N' in [m, N]
    :param threshold: rows with n at or below this were excluded from lhs (None if no exclusion applied)
    :param rows: the degree table over [1, N]
    """

    def __init__(self, lhs: float, rhs: float, c_emp: float, verdict: str, stability: dict,
                 stability_variation: float, tail_variation: float, threshold: float | None,
                 rows: Sequence[ResultRow]):
        self.lhs = lhs
        self.rhs = rhs
        self.c_emp = c_emp
        self.verdict = verdict
        self.stability = {int(key): value for key, value in stability.items()}
        self.stability_variation = stability_variation
        self.tail_variation = tail_variation
        self.threshold = threshold
        self.rows = list(rows)

    @property
    def stable(self) -> bool:
        return self.verdict == "ok" and self.stability_variation < STABILITY_LIMIT \
            and self.tail_variation < STABILITY_LIMIT

    def table(self) -> tuple:
        header = ("N", "c_emp")
        rows = [(N, c) for N, c in sorted(self.stability.items())]
        rows.append(("lhs", self.lhs))
        rows.append(("rhs", self.rhs))
        rows.append(("c_emp", self.c_emp))
        rows.append(("stability_variation", self.stability_variation))
        rows.append(("tail_variation", self.tail_variation))
        rows.append(("verdict", self.verdict))
        return header, rows

    def _to_dict(self):
        return {
            "lhs": self.lhs, "rhs": self.rhs, "c_emp": self.c_emp, "verdict": self.verdict,
            "stability": {str(key): value for key, value in self.stability.items()},
            "stability_variation": self.stability_variation, "tail_variation": self.tail_variation,
            "threshold": self.threshold, "rows": [row._to_dict() for row in self.rows]
        }

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(json_dict["lhs"], json_dict["rhs"], json_dict["c_emp"], json_dict["verdict"],
                   json_dict["stability"], json_dict["stability_variation"], json_dict["tail_variation"],
                   json_dict["threshold"], [ResultRow._from_dict(row) for row in json_dict["rows"]])

    def __repr__(self):
        return "RatioReport(c_emp={:.6g}, verdict={}, stable={})".format(self.c_emp, self.verdict, self.stable)


def exclusion_threshold(cfg: ExperimentConfig) -> float | None:
    """
    For sigma = 4 and a single inflection point y_1 (on [-1, 1]), the direct estimate is only claimed for
    n > (1 - y_1^2)^(-1/2); returns that threshold, or None when no rows are excluded.
    """
    partition = cfg.partition
    if cfg.sigma == 4 and partition.s == 1:
        y = partition.points[0]
        return (1 - y * y) ** -0.5
    return None


def _constant(rows: Sequence[ResultRow], m: int, N: int, threshold: float | None) -> tuple:
    lhs_values = [row.nsig_E2 for row in rows if m <= row.n <= N and (threshold is None or row.n > threshold)]
    rhs_values = [row.nsig_E for row in rows if row.n <= N]
    lhs = max(lhs_values, default=0.0)
    rhs = max(rhs_values, default=0.0)
    return lhs, rhs, (lhs / rhs if rhs >= ZERO_TOLERANCE else math.nan)


def ratio_experiment(cfg: ExperimentConfig) -> RatioReport:
    """
    Empirical constant of the direct comparison  sup_{n >= m} n^sigma E2_n <= c sup_{n >= 1} n^sigma E_n  on the
    finite range: c_emp = lhs / rhs with lhs over [m, N] and rhs over [1, N]. A vanishing rhs makes the experiment
    INDETERMINATE. Stability is measured by recomputing c_emp with N replaced by N/2 and 3N/4, and over the last
    quartile of the range.

    :param cfg: the experiment config
    """
    rows = rows_from_sequences(_sequences(cfg, range(1, cfg.N + 1)), cfg.sigma)
    threshold = exclusion_threshold(cfg)
    lhs, rhs, c_emp = _constant(rows, cfg.m, cfg.N, threshold)
    if rhs < ZERO_TOLERANCE:
        logging.warning("The unconstrained column vanishes; the empirical constant is indeterminate.")
        return RatioReport(lhs, rhs, math.nan, "INDETERMINATE", {}, math.nan, math.nan, threshold, rows)

    checkpoints = sorted({max(cfg.m, cfg.N // 2), max(cfg.m, (3 * cfg.N) // 4), cfg.N})
    stability = {N: _constant(rows, cfg.m, N, threshold)[2] for N in checkpoints}
    tail_start = max(cfg.m, cfg.N - max(1, (cfg.N - cfg.m + 1) // 4))
    tail = [_constant(rows, cfg.m, N, threshold)[2] for N in range(tail_start, cfg.N + 1)]
    tail = [c for c in tail if math.isfinite(c)]
    report = RatioReport(lhs, rhs, c_emp, "ok", stability, relative_variation(list(stability.values())),
                         relative_variation(tail), threshold, rows)
    logging.info(repr(report))
    return report


# ---------------------------------------- Inverse estimate ---------------------------------------

@dataclass
class LowerBoundRow:
    n: int
    E2: float
    lhs: float
    ratio: float
    flag: str


class LowerBoundReport(SavesToJSON):

    """
    Outcome of :func:`lower_bound_check`.

    :param norm_f: the weighted norm of f
    :param eta: the exponent eta
    :param rows: the :class:`LowerBoundRow` list, with lhs = n^(-eta) ||f|| and ratio = lhs / E2_n
    :param c_emp: max of the unflagged ratios (NaN if all rows are flagged)
    :param c_first: max of n^sigma E_n over [1, N], the empirical constant of n^sigma E_n <= c
    """

    def __init__(self, norm_f: float, eta: float, rows: Sequence[LowerBoundRow], c_emp: float, c_first: float):
        self.norm_f = norm_f
        self.eta = eta
        self.rows = list(rows)
        self.c_emp = c_emp
        self.c_first = c_first

    def table(self) -> tuple:
        return ("n", "E2_n", "lhs", "ratio", "flag"), [(r.n, r.E2, r.lhs, r.ratio, r.flag) for r in self.rows]

    def _to_dict(self):
        return {"norm_f": self.norm_f, "eta": self.eta, "rows": [asdict(row) for row in self.rows],
                "c_emp": self.c_emp, "c_first": self.c_first}

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(json_dict["norm_f"], json_dict["eta"], [LowerBoundRow(**row) for row in json_dict["rows"]],
                   json_dict["c_emp"], json_dict["c_first"])


def lower_bound_check(cfg: ExperimentConfig) -> LowerBoundReport:
    """
    Tabulates n^(-eta) ||f|| / E2_n for a function with exactly one inflection point and reports the largest value as
    the empirical constant of the inverse estimate. Rows with E2_n below 1e-12 are flagged "unstable"; when f itself
    vanishes every row is flagged "trivial".

    :param cfg: the experiment config (its partition must hold one point)
    """
    if cfg.partition.s != 1:
        raise ParameterError("The inverse estimate is checked for exactly one inflection point (got {})."
                             .format(cfg.partition.s))
    norm_f = weighted_lp_norm(cfg.target, cfg.norm)
    sequences = _sequences(cfg, range(1, cfg.N + 1))
    c_first = max(n ** cfg.sigma * free.error for n, free, _ in sequences)
    rows = []
    for n, _, shaped in sequences:
        if n < cfg.m:
            continue
        lhs = n ** -cfg.eta * norm_f
        if norm_f < ZERO_TOLERANCE:
            rows.append(LowerBoundRow(n, shaped.error, lhs, math.nan, "trivial"))
        elif shaped.error < ZERO_TOLERANCE:
            rows.append(LowerBoundRow(n, shaped.error, lhs, math.nan, "unstable"))
        else:
            rows.append(LowerBoundRow(n, shaped.error, lhs, lhs / shaped.error, shaped.status.value))
    ratios = [row.ratio for row in rows if math.isfinite(row.ratio)]
    return LowerBoundReport(norm_f, cfg.eta, rows, max(ratios, default=math.nan), c_first)


# --------------------------------------------- Moduli --------------------------------------------

@dataclass
class ModulusRatioRow:
    n: int
    mesh: float
    error: float
    modulus: float
    ratio: float
    flag: str
    unweighted_modulus: float | None = None


class ModulusRatioReport(SavesToJSON):

    """
    Rows of an error-to-modulus comparison, with the empirical constant and whether the ratios stay bounded.

    :param kind: "jackson" (spline errors) or "coconvex" (polynomial errors times n^sigma)
    :param rows: the :class:`ModulusRatioRow` list
    """

    def __init__(self, kind: str, rows: Sequence[ModulusRatioRow]):
        self.kind = kind
        self.rows = list(rows)

    @property
    def ratios(self) -> list:
        return [row.ratio for row in self.rows if row.flag == "ok" and math.isfinite(row.ratio) and row.ratio > 0]

    @property
    def c_emp(self) -> float:
        return max(self.ratios, default=math.nan)

    @property
    def spread(self) -> float:
        ratios = self.ratios
        return max(ratios) / min(ratios) if ratios else 1.0

    @property
    def bounded(self) -> bool:
        return self.spread < BOUNDED_SPREAD

    def table(self) -> tuple:
        header = ("n", "mesh", "error", "modulus", "ratio", "flag", "unweighted_modulus")
        return header, [(r.n, r.mesh, r.error, r.modulus, r.ratio, r.flag, r.unweighted_modulus) for r in self.rows]

    def _to_dict(self):
        return {"kind": self.kind, "rows": [asdict(row) for row in self.rows]}

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(json_dict["kind"], [ModulusRatioRow(**row) for row in json_dict["rows"]])

    def __repr__(self):
        return "ModulusRatioReport({}, c_emp={:.6g}, bounded={})".format(self.kind, self.c_emp, self.bounded)


def _derivative(f: Callable, r: int) -> Callable:
    if r == 0:
        return f
    if not hasattr(f, "derivative"):
        raise ParameterError("The function must provide derivative() when r > 0.")
    return f.derivative(r)


def _piecewise_error(g: Callable, norm: WeightedNormParams, knots) -> float:
    if norm.is_sup_norm:
        return weighted_lp_norm(g, norm)
    disc = discretize_norm(norm, refinement=2, edges=knots)
    return disc.norm_of(g(disc.x))


def spline_jackson_check(f: Callable, r: int, i: int, n_range: Sequence[int], norm: WeightedNormParams,
                         k: int = 3, continuity: str = "C1", constraint: ShapeConstraint | None = None) \
        -> ModulusRatioReport:
    """
    For each n, fits the best spline of order k on the Chebyshev partition with n intervals and compares the error
    ||f^(r) - S^(r)|| with the weighted modulus omega^phi_{i,r}(f^(r), ||theta_n||). Rows whose mesh norm is not
    below 2/i are flagged "mesh" and skipped. For r = 0 and the unit weight the unweighted Ditzian-Totik modulus is
    reported alongside (the two coincide).

    :param f: the function on [-1, 1], with a derivative() method when r > 0
    :param r: derivative order
    :param i: difference order of the modulus
    :param n_range: numbers of intervals
    :param norm: weighted norm on [-1, 1]
    :param k: spline order
    :param continuity: "C0" or "C1"
    :param constraint: optional shape constraint on the splines
    """
    if r < 0 or i < 1:
        raise ParameterError("Need r >= 0 and i >= 1 (got r = {}, i = {}).".format(r, i))
    f_r = _derivative(f, r)
    spec = ModulusSpec(k=i, r=float(r), step_mode=StepMode.PHI, weight=norm.weight, p=norm.p)
    unweighted_spec = ModulusSpec(k=i, r=0.0, step_mode=StepMode.PHI, p=norm.p) \
        if r == 0 and norm.weight.is_unit else None
    rows = []
    for n in n_range:
        partition = ChebyshevPartition(n)
        mesh = MeshPartition.from_chebyshev_partition(partition)
        if mesh.mesh_norm >= 2 / i:
            rows.append(ModulusRatioRow(n, mesh.mesh_norm, math.nan, math.nan, math.nan, "mesh"))
            continue
        solution = best_spline(f, partition, k, continuity, constraint, norm)
        spline_r = solution.spline.derivative(r) if r else solution.spline
        error = solution.error if r == 0 else \
            _piecewise_error(lambda x: f_r(x) - spline_r(x), norm, partition.knots)
        modulus = weighted_dt_modulus(f_r, spec, mesh)
        if error < ZERO_TOLERANCE:
            ratio, flag = 0.0, "exact"
        elif modulus < ZERO_TOLERANCE:
            ratio, flag = math.nan, "indeterminate"
        else:
            ratio, flag = error / modulus, "ok" if solution.status is SolveStatus.OPTIMAL else solution.status.value
        unweighted = dt_modulus(f_r, unweighted_spec, mesh.mesh_norm) if unweighted_spec is not None else None
        logging.info("n = {}: spline error {:.6g}, modulus {:.6g}".format(n, error, modulus))
        rows.append(ModulusRatioRow(n, mesh.mesh_norm, error, modulus, ratio, flag, unweighted))
    return ModulusRatioReport("jackson", rows)


def coconvex_modulus_check(cfg: ExperimentConfig) -> ModulusRatioReport:
    """
    Tabulates n^sigma E2_n / omega^phi_{i,r}(f^(r), ||theta_n||) over the Chebyshev partitions, where E2_n is the
    degree of best coconvex (convex when there are no inflection points) approximation, and reports the empirical
    constant. The function must live on [-1, 1].

    :param cfg: the experiment config (uses r, i, sigma and the n range)
    """
    if tuple(cfg.domain) != (-1.0, 1.0):
        raise ParameterError("The modulus comparison is made on [-1, 1] only.")
    f_r = _derivative(cfg.target, cfg.r)
    spec = ModulusSpec(k=cfg.i, r=float(cfg.r), step_mode=StepMode.PHI, weight=cfg.norm.weight, p=cfg.p)
    rows = []
    for n, _, shaped in _sequences(cfg, cfg.n_values):
        mesh = MeshPartition.from_chebyshev_partition(ChebyshevPartition(n))
        if mesh.mesh_norm >= 2 / cfg.i:
            rows.append(ModulusRatioRow(n, mesh.mesh_norm, shaped.error, math.nan, math.nan, "mesh"))
            continue
        modulus = weighted_dt_modulus(f_r, spec, mesh)
        scaled = n ** cfg.sigma * shaped.error
        if scaled < ZERO_TOLERANCE:
            ratio, flag = 0.0, "exact"
        elif modulus < ZERO_TOLERANCE:
            ratio, flag = math.nan, "indeterminate"
        else:
            ratio, flag = scaled / modulus, "ok" if shaped.status is SolveStatus.OPTIMAL else shaped.status.value
        rows.append(ModulusRatioRow(n, mesh.mesh_norm, shaped.error, modulus, ratio, flag))
    return ModulusRatioReport("coconvex", rows)
