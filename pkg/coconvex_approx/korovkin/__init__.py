"""
Subpackage containing Fourier coefficients and the Fejer and matrix-weighted operators built from them, nonnegative
summability matrices, A-statistical limits of finite sequence prefixes, and the statistical Korovkin experiments.
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

from .fourier import FourierCoefficients, fourier_coeffs, partial_sum, fejer_apply, OperatorMode, OperatorSpec, \
    tn_apply, DEFAULT_NODES
from .summability import SummabilityMatrix, StatisticalLimitResult, st_A_limit, ordinary_limit_verdict, \
    DENSITY_THRESHOLD, DENSITY_RISE_TOLERANCE
from .experiments import korovkin_test_functions, JointNullityReport, joint_nullity_experiment, ModulusSumReport, \
    modulus_sum_experiment, FejerConvergenceReport, fejer_convergence, DEFAULT_EPS
