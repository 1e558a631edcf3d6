"""
Subpackage containing the experiment harness: function expressions and the registry of test functions, experiment
configuration, degree tables and the empirical checks of the comparison estimates, the worked example on [-1, 2], and
the command-line interface.
"""

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

from .expressions import Expression, tokenize, FUNCTIONS, CONSTANTS
from .registry import RegisteredFunction, REGISTRY, FIXTURE_FAMILY, lookup
from .config import ExperimentConfig, parse_exponent, parse_n_range, parse_points, MAX_N
from .experiments import ResultRow, DegreeTable, RatioReport, LowerBoundRow, LowerBoundReport, ModulusRatioRow, \
    ModulusRatioReport, degree_table, rows_from_sequences, write_degree_table, write_table, ratio_experiment, \
    exclusion_threshold, lower_bound_check, spline_jackson_check, coconvex_modulus_check, DEGREE_TABLE_HEADER
from .oscillating_example import OscillatingExampleReport, CandidateRow, oscillating_example, abs_integral, \
    smooth_abs_integral, oscillatory_abs_integral
