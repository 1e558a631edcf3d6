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
Module containing :class:`ExperimentConfig`, the single bundle of settings behind every CLI subcommand and experiment.
Configs load from YAML or JSON files and save to JSON; command-line flags override the values of a config file.
"""

from __future__ import annotations
from dataclasses import dataclass, fields, replace
import math
import yaml
from expenvelope.envelope import SavesToJSON
from ..shape import InflectionPartition
from ..solvers import ShapeConstraint, SOLVER_TOLERANCE
from ..utilities import ParameterError
from ..weighted_spaces import WeightedNormParams
from .expressions import Expression
from .oscillating_example import MODES, MODE_ALIASES
from .registry import lookup

#: largest degree range the experiments accept
MAX_N = 64


def parse_exponent(value) -> float:
    """Reads an L_p exponent given as a number or as the text "inf"."""
    if isinstance(value, str):
        value = value.strip().lower()
        if value in ("inf", "infinity", "oo"):
            return math.inf
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ParameterError("Cannot read the exponent p from {!r}.".format(value))


def parse_n_range(text: str) -> tuple:
    """Reads a range "m:N" into the pair (m, N)."""
    try:
        m, N = (int(part) for part in str(text).split(":"))
    except ValueError:
        raise ParameterError("An n range looks like m:N with integers m and N (got {!r}).".format(text))
    return m, N


def parse_points(text) -> tuple:
    """Reads a comma-separated list of numbers (or passes a sequence through)."""
    if text is None:
        return ()
    if isinstance(text, str):
        return tuple(float(part) for part in text.split(",") if part.strip())
    return tuple(float(v) for v in text)


@dataclass
class ExperimentConfig(SavesToJSON):

    """
    Settings of an experiment or CLI command.

    :param function: registry name or expression text of the target function
    :param interval: interval the function is studied on (default: the registry entry's interval)
    :param inflections: inflection points in the interval's coordinates (default: the registry entry's)
    :param alpha: Jacobi exponent on (1 + x)
    :param beta: Jacobi exponent on (1 - x)
    :param p: the L_p exponent (a number >= 1, or inf)
    :param degree: polynomial space dimension n for single solves
    :param shape: "none", "convex" or "coconvex"
    :param sigma: the exponent sigma of the degree comparisons
    :param eta: the exponent eta of the lower-bound check
    :param m: first n of the range
    :param N: last n of the range
    :param k: spline order
    :param continuity: spline continuity, "C0" or "C1"
    :param r: derivative order in the spline and modulus checks
    :param i: difference order in the spline and modulus checks
    :param t: step bound of the modulus command
    :param step_mode: "phi" (Ditzian-Totik) or "constant" (classical) steps in the modulus command
    :param intervals: number of Chebyshev partition intervals of the spline command
    :param cells: cell budget of the Stieltjes command
    :param integrators: comma-separated powers t^q used as integrators by the Stieltjes command
    :param mode: "literal" (or "paper-literal"), "corrected" or "both" for the worked example
    :param polish: whether the approx command polishes unconstrained sup-norm solutions by Remez exchange
    :param solver_tol: solver tolerance
    :param out: output path (None: standard output)
    :param format: "csv" or "json"
    """

    function: str = "neg_sin_pi"
    interval: tuple | None = None
    inflections: tuple | None = None
    alpha: float = 0.0
    beta: float = 0.0
    p: float = math.inf
    degree: int = 4
    shape: str = "coconvex"
    sigma: float = 1.0
    eta: float = 1.0
    m: int = 1
    N: int = 16
    k: int = 3
    continuity: str = "C1"
    r: int = 0
    i: int = 3
    t: float = 0.1
    step_mode: str = "phi"
    intervals: int = 8
    cells: int = 2 ** 16
    integrators: str = "1"
    mode: str = "both"
    polish: bool = False
    solver_tol: float = SOLVER_TOLERANCE
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        self.p = parse_exponent(self.p)
        if self.interval is not None:
            self.interval = tuple(float(v) for v in self.interval)
        if self.inflections is not None:
            self.inflections = parse_points(self.inflections)
        if not 1 <= self.m <= self.N <= MAX_N:
            raise ParameterError("The n range must satisfy 1 <= m <= N <= {} (got m = {}, N = {})."
                                 .format(MAX_N, self.m, self.N))
        if not self.sigma > 0:
            raise ParameterError("sigma must be positive (got {}).".format(self.sigma))
        if self.shape not in ("none", "convex", "coconvex"):
            raise ParameterError("Unknown shape {!r}.".format(self.shape))
        if self.format not in ("csv", "json"):
            raise ParameterError("Unknown output format {!r}.".format(self.format))
        self.mode = MODE_ALIASES.get(self.mode, self.mode)
        if self.mode not in MODES:
            raise ParameterError("Unknown mode {!r}.".format(self.mode))

    # ------------------------------------- Derived objects ----------------------------------------

    @property
    def entry(self):
        return lookup(self.function)

    @property
    def target(self) -> Expression:
        return self.entry.expression

    @property
    def domain(self) -> tuple:
        return self.interval if self.interval is not None else tuple(self.entry.interval)

    @property
    def inflection_points(self) -> tuple:
        return self.inflections if self.inflections is not None else tuple(self.entry.inflections)

    @property
    def partition(self) -> InflectionPartition:
        """The inflection points, mapped to [-1, 1]."""
        return InflectionPartition.on_interval(self.inflection_points, self.domain)

    @property
    def norm(self) -> WeightedNormParams:
        return WeightedNormParams.create(self.alpha, self.beta, self.p, self.domain)

    @property
    def constraint(self) -> ShapeConstraint:
        if self.shape == "coconvex":
            partition = self.partition
            return ShapeConstraint.coconvex(partition) if partition.s else ShapeConstraint.convex()
        return ShapeConstraint.parse(self.shape)

    @property
    def n_values(self) -> range:
        return range(self.m, self.N + 1)

    def updated(self, **overrides) -> ExperimentConfig:
        """A copy with the given (non-None) settings replaced."""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})

    # ------------------------------------- Loading / Saving ---------------------------------------

    @classmethod
    def from_mapping(cls, mapping: dict) -> ExperimentConfig:
        known = {f.name for f in fields(cls)} | {"n_range"}
        unknown = set(mapping) - known
        if unknown:
            raise ParameterError("Unknown configuration keys: {}.".format(", ".join(sorted(unknown))))
        settings = dict(mapping)
        if "n_range" in settings:
            settings["m"], settings["N"] = parse_n_range(settings.pop("n_range"))
        return cls(**settings)

    @classmethod
    def load(cls, path: str) -> ExperimentConfig:
        """
        Loads a config file written in YAML or JSON (any JSON document is also YAML).

        :param path: path of the file
        """
        with open(path, "r") as file:
            contents = yaml.safe_load(file)
        if contents is None:
            contents = {}
        if not isinstance(contents, dict):
            raise ParameterError("A config file must contain a mapping of settings.")
        return cls.from_mapping(contents)

    def _to_dict(self):
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["p"] = "inf" if math.isinf(self.p) else self.p
        for key in ("interval", "inflections"):
            if out[key] is not None:
                out[key] = list(out[key])
        return out

    @classmethod
    def _from_dict(cls, json_dict):
        return cls.from_mapping(json_dict)
