"""
Subpackage containing Jacobi weights, the admissible exponent ranges J_p, Gaussian and adaptive quadrature with
endpoint singularities, and weighted L_p (quasi-)norms on general intervals.
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

from .jacobi import JacobiWeight, weight_eval, in_Jp, WeightedNormParams
from .quadrature import QuadratureKind, QuadratureRule, gauss_legendre_rule, gauss_jacobi_rule, \
    composite_jacobi_rule, adaptive_weighted_integral, jacobi_moment, check_exactness
from .norms import NormDiscretization, discretize_norm, NormResult, weighted_lp_norm, weighted_lp_norm_report, \
    split_weighted_integral_difference
