"""
Subpackage containing the polynomial algebra: polynomials in the Chebyshev basis (evaluation by Clenshaw's
recurrence, exact differentiation, power-basis conversion, real roots), the Chebyshev partition of [-1, 1], and C0/C1
piecewise polynomials on arbitrary knot sequences.
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

from .chebyshev import ChebyshevPolynomial, cheb_eval, cheb_derivative
from .partitions import ChebyshevPartition, chebyshev_knots, PiecewisePolynomial, piecewise_continuity_check
