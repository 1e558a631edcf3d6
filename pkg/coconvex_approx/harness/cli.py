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
The ``coconvex-approx`` command line. Every subcommand builds an :class:`ExperimentConfig` (from ``--config`` if
given, with explicit flags taking precedence) and prints its result as CSV or JSON to standard output or ``--out``.
"""

from __future__ import annotations
from typing import List, Optional
import argparse
import json
import logging
import sys
import numpy as np
from ..korovkin import SummabilityMatrix, fejer_convergence, modulus_sum_experiment, joint_nullity_experiment
from ..polynomials import ChebyshevPartition
from ..smoothness import ModulusSpec, StepMode, h_grid_convergence
from ..solvers import ApproxProblem, best_approximation, best_unconstrained, best_spline
from ..stieltjes import Integrator, ls_integral
from ..utilities import ParameterError
from ..weighted_spaces import weighted_lp_norm_report
from .config import ExperimentConfig, parse_n_range, parse_points
from .oscillating_example import oscillating_example
from .experiments import DegreeTable, coconvex_modulus_check, degree_table, ratio_experiment, \
    spline_jackson_check, lower_bound_check, write_table

#: exit status for invalid input and numerical failures
EXIT_FAILURE = 2
EXPERIMENTS = ("table", "ratio", "lower-bound", "jackson", "modulus", "oscillating")
#: the short names each experiment also answers to
EXPERIMENT_ALIASES = {"thm212": "lower-bound", "example28": "oscillating"}

_CONFIG_FLAGS = ("function", "interval", "inflections", "alpha", "beta", "p", "degree", "shape", "sigma", "eta", "k",
                 "continuity", "r", "i", "t", "step_mode", "intervals", "cells", "integrators", "mode", "polish",
                 "solver_tol", "out", "format")


class Summary:

    """A flat mapping of named results, printed as a two-column table or as a JSON object."""

    def __init__(self, **values):
        self.values = values

    def table(self) -> tuple:
        return ("quantity", "value"), list(self.values.items())

    def _to_dict(self):
        return self.values


# -------------------------------------------- Parsing --------------------------------------------

def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", type=str, default=None, help="YAML or JSON file with settings (flags override it).")
    p.add_argument("--fn", dest="function", type=str, default=None,
                   help="Registry name or expression in x (e.g. 'x^3*abs(x)').")
    p.add_argument("--interval", type=str, default=None, help="Interval a,b the function lives on.")
    p.add_argument("--inflections", type=str, default=None, help="Inflection points y1,y2,... on the interval.")
    p.add_argument("--alpha", type=float, default=None, help="Jacobi exponent on (1 + x).")
    p.add_argument("--beta", type=float, default=None, help="Jacobi exponent on (1 - x).")
    p.add_argument("--p", type=str, default=None, help="Exponent: 1, 2, inf or any real >= 1.")
    p.add_argument("--degree", type=int, default=None, help="Polynomial space dimension n (degree <= n - 1).")
    p.add_argument("--shape", choices=["none", "convex", "coconvex"], default=None, help="Shape constraint.")
    p.add_argument("--sigma", type=float, default=None, help="Exponent sigma of the degree comparisons.")
    p.add_argument("--eta", type=float, default=None, help="Exponent eta of the lower-bound check.")
    p.add_argument("--n-range", dest="n_range", type=str, default=None, help="Range m:N of n.")
    p.add_argument("--k", type=int, default=None, help="Spline order.")
    p.add_argument("--continuity", choices=["C0", "C1"], default=None, help="Spline continuity.")
    p.add_argument("--r", type=int, default=None, help="Derivative order.")
    p.add_argument("--i", type=int, default=None, help="Difference order.")
    p.add_argument("--t", type=float, default=None, help="Step bound of the modulus.")
    p.add_argument("--step-mode", dest="step_mode", choices=["phi", "constant"], default=None,
                   help="Ditzian-Totik (phi) or classical (constant) steps.")
    p.add_argument("--intervals", type=int, default=None, help="Intervals of the Chebyshev partition.")
    p.add_argument("--cells", type=int, default=None, help="Cell budget of the Stieltjes sums.")
    p.add_argument("--integrators", type=str, default=None, help="Powers q1,q2,... of the integrators mu^q.")
    p.add_argument("--mode", choices=["literal", "paper-literal", "corrected", "both"], default=None,
                   help="Computation mode of the worked example.")
    p.add_argument("--polish", action="store_true", default=None, help="Polish sup-norm solutions by Remez exchange.")
    p.add_argument("--solver-tol", dest="solver_tol", type=float, default=None, help="Solver tolerance.")
    p.add_argument("--out", type=str, default=None, help="Output file (default: standard output).")
    p.add_argument("--format", choices=["csv", "json"], default=None, help="Output format.")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="coconvex-approx",
                                     description="Weighted shape-preserving polynomial approximation.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Log progress and solver details.")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Only log errors.")
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("norm", parents=[common], help="Weighted L_p norm of a function.")
    commands.add_parser("modulus", parents=[common], help="Modulus of smoothness of f^(r) at step t.")
    commands.add_parser("approx", parents=[common], help="Best (shape-constrained) polynomial approximation.")
    commands.add_parser("spline", parents=[common], help="Best piecewise polynomial approximation.")
    commands.add_parser("stieltjes", parents=[common], help="Lebesgue-Stieltjes integral by dyadic refinement.")
    korovkin = commands.add_parser("korovkin", parents=[common], help="Fejer means and statistical limits.")
    korovkin.add_argument("task", choices=["fejer", "nullity", "moduli"])
    experiment = commands.add_parser("experiment", parents=[common],
                                     help="Degree tables and the empirical estimate checks.")
    experiment.add_argument("name", choices=EXPERIMENTS + tuple(EXPERIMENT_ALIASES))
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """Settings from the config file (if any), overridden by the flags given explicitly."""
    cfg = ExperimentConfig.load(args.config) if args.config else ExperimentConfig()
    overrides = {name: getattr(args, name) for name in _CONFIG_FLAGS}
    if overrides["interval"] is not None:
        overrides["interval"] = parse_points(overrides["interval"])
    if args.n_range is not None:
        overrides["m"], overrides["N"] = parse_n_range(args.n_range)
    return cfg.updated(**overrides)


# -------------------------------------------- Commands -------------------------------------------

def run_norm(cfg: ExperimentConfig):
    result = weighted_lp_norm_report(cfg.target, cfg.norm)
    return Summary(function=cfg.function, p=cfg.p, alpha=cfg.alpha, beta=cfg.beta, value=result.value,
                   error_estimate=result.error_estimate, quasi_norm=result.quasi_norm, lower_bound=result.lower_bound)


def run_modulus(cfg: ExperimentConfig):
    norm = cfg.norm
    spec = ModulusSpec(k=cfg.i, r=float(cfg.r), step_mode=StepMode(cfg.step_mode),
                       weight=None if norm.weight.is_unit else norm.weight, p=cfg.p)
    value, doubled, change = h_grid_convergence(cfg.target.derivative(cfg.r), spec, cfg.t)
    return Summary(function=cfg.function, k=cfg.i, r=cfg.r, t=cfg.t, value=value, value_doubled_h_grid=doubled,
                   relative_change=change)


def run_approx(cfg: ExperimentConfig):
    problem = ApproxProblem(cfg.target, cfg.degree, cfg.norm, cfg.constraint, solver_tol=cfg.solver_tol)
    if cfg.polish and not problem.constraint.is_shape_constrained:
        solution = best_unconstrained(problem, polish=True)
    else:
        solution = best_approximation(problem)
    values = dict(n=problem.n, shape=repr(problem.constraint), error=solution.error,
                  discretization_error_estimate=solution.discretization_error_estimate,
                  min_residual=solution.min_residual, iterations=solution.iterations, status=solution.status.value)
    values.update(("c{}".format(j), c) for j, c in enumerate(solution.polynomial.coeffs))
    return Summary(**values)


def run_spline(cfg: ExperimentConfig):
    if tuple(cfg.domain) != (-1.0, 1.0):
        raise ParameterError("Splines are fitted on [-1, 1] only.")
    solution = best_spline(cfg.target, ChebyshevPartition(cfg.intervals), cfg.k, cfg.continuity, cfg.constraint,
                           cfg.norm, solver_tol=cfg.solver_tol)
    return Summary(intervals=cfg.intervals, k=cfg.k, continuity=cfg.continuity, error=solution.error,
                   discretization_error_estimate=solution.discretization_error_estimate,
                   iterations=solution.iterations, status=solution.status.value)


def run_stieltjes(cfg: ExperimentConfig):
    integrators = [Integrator.identity() if q == 1 else Integrator.power(q) for q in parse_points(cfg.integrators)]
    result = ls_integral(cfg.target, integrators, max_cells=cfg.cells, domain=cfg.domain)
    return Summary(verdict=result.verdict, value=result.value, lower=result.sums.lower, upper=result.sums.upper,
                   cells=result.cells)


def run_korovkin(cfg: ExperimentConfig, task: str):
    if task == "fejer":
        return fejer_convergence(cfg.target, cfg.n_values)
    if task == "nullity":
        return joint_nullity_experiment({cfg.function: cfg.target}, cfg.partition, SummabilityMatrix.cesaro(cfg.N),
                                        cfg.norm, cfg.N)
    return modulus_sum_experiment(cfg.i, N=cfg.N, p=cfg.p)


def run_experiment(cfg: ExperimentConfig, name: str):
    name = EXPERIMENT_ALIASES.get(name, name)
    if name == "table":
        return DegreeTable(cfg, degree_table(cfg))
    if name == "ratio":
        return ratio_experiment(cfg)
    if name == "lower-bound":
        return lower_bound_check(cfg)
    if name == "jackson":
        if tuple(cfg.domain) != (-1.0, 1.0):
            raise ParameterError("The spline check runs on [-1, 1] only.")
        return spline_jackson_check(cfg.target, cfg.r, cfg.i, cfg.n_values, cfg.norm, cfg.k, cfg.continuity)
    if name == "modulus":
        return coconvex_modulus_check(cfg)
    return oscillating_example(cfg.mode)


# --------------------------------------------- Output --------------------------------------------

def _json_default(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError("Cannot serialize {!r}.".format(value))


def emit(result, cfg: ExperimentConfig):
    """Writes a result (anything with table() and _to_dict()) in the configured format."""
    stream = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    try:
        if cfg.format == "json":
            stream.write(json.dumps(result._to_dict(), indent=2, default=_json_default) + "\n")
        else:
            header, rows = result.table()
            write_table(header, rows, stream)
    finally:
        if cfg.out:
            stream.close()


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        cfg = config_from_args(args)
        if args.command == "korovkin":
            result = run_korovkin(cfg, args.task)
        elif args.command == "experiment":
            result = run_experiment(cfg, args.name)
        else:
            result = {"norm": run_norm, "modulus": run_modulus, "approx": run_approx, "spline": run_spline,
                      "stieltjes": run_stieltjes}[args.command](cfg)
        emit(result, cfg)
    except (ValueError, ArithmeticError) as error:
        logging.error("{}: {}".format(type(error).__name__, error))
        return EXIT_FAILURE
    return 0


if __name__ == "__main__":
    sys.exit(main())
