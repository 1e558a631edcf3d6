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
Package for weighted shape-preserving polynomial approximation: degrees of best unconstrained, convex and coconvex
approximation of functions in Jacobi-weighted L_p spaces, the moduli of smoothness they are compared with, and the
experiments that check the comparison estimates numerically.

The package is split into subpackages according to the nature of the content: the polynomials, weighted_spaces and
smoothness subpackages hold the basic objects (Chebyshev-basis polynomials and partitions, Jacobi weights and norms,
moduli of smoothness); the shape subpackage certifies convexity and coconvexity; the solvers subpackage computes best
approximations; the stieltjes and korovkin subpackages contain generalized Lebesgue-Stieltjes sums and the
statistical Korovkin-type experiments; and the harness subpackage drives the experiments and the command line.
"""

import importlib.metadata

try:
    __version__ = importlib.metadata.version('coconvex_approx')
    __author__ = importlib.metadata.metadata('coconvex_approx')['Author']
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"
    __author__ = "The coconvex_approx developers"
