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

from __future__ import annotations
from numbers import Real
from typing import Sequence
import numpy as np
from numpy.polynomial import chebyshev as cheb
from numpy.polynomial import Chebyshev, Polynomial
from expenvelope.envelope import SavesToJSON
from ..utilities import AffineMap, DomainError, ParameterError


class ChebyshevPolynomial(SavesToJSON):

    """
    An algebraic polynomial stored by its coefficients in the Chebyshev basis, p = c_0 T_0 + c_1 T_1 + ... + c_d T_d.
    Polynomials living on an interval [a, b] other than [-1, 1] store the affine map from [-1, 1] to [a, b] alongside
    their coefficients; the T_j are then taken in the mapped variable. Instances are immutable.

    :param coeffs: coefficients c_0, ..., c_d (trailing zeros are allowed and count towards the degree bound)
    :param domain: the interval [a, b] on which the polynomial lives
    """

    def __init__(self, coeffs: Sequence[float], domain: Sequence[float] | AffineMap = (-1.0, 1.0)):
        coeffs = np.array(coeffs, dtype=float).ravel()
        if coeffs.size == 0:
            coeffs = np.zeros(1)
        if not np.all(np.isfinite(coeffs)):
            raise ParameterError("Chebyshev coefficients must all be finite.")
        coeffs.flags.writeable = False
        self._coeffs = coeffs
        self._map = domain if isinstance(domain, AffineMap) else AffineMap(float(domain[0]), float(domain[1]))

    @classmethod
    def zero(cls, domain=(-1.0, 1.0)) -> ChebyshevPolynomial:
        return cls([0.0], domain)

    @classmethod
    def from_power_basis(cls, power_coeffs: Sequence[float], domain=(-1.0, 1.0)) -> ChebyshevPolynomial:
        """
        Builds a polynomial from its coefficients in the power basis, i.e. p(x) = a_0 + a_1 x + ... + a_d x^d, where
        x is the variable on the given domain.

        :param power_coeffs: coefficients a_0, ..., a_d
        :param domain: the interval [a, b] on which the polynomial lives
        """
        a, b = (domain.a, domain.b) if isinstance(domain, AffineMap) else domain
        converted = Polynomial(power_coeffs).convert(kind=Chebyshev, domain=[a, b])
        coeffs = np.zeros(len(power_coeffs))
        coeffs[:len(converted.coef)] = converted.coef
        return cls(coeffs, domain)

    @classmethod
    def from_numpy(cls, series: Chebyshev) -> ChebyshevPolynomial:
        if not np.allclose(series.window, [-1, 1]):
            series = series.convert(kind=Chebyshev, domain=series.domain)
        return cls(series.coef, tuple(series.domain))

    # ---------------------------------------- Properties -------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def affine_map(self) -> AffineMap:
        return self._map

    @property
    def domain(self) -> tuple:
        return self._map.a, self._map.b

    @property
    def degree_bound(self) -> int:
        """The bound d = (number of coefficients) - 1."""
        return len(self._coeffs) - 1

    def degree(self, tol: float = 0.0) -> int:
        """
        Actual degree, ignoring trailing coefficients whose magnitude is at most tol times the largest coefficient.
        The zero polynomial has degree 0.
        """
        scale = np.max(np.abs(self._coeffs))
        nonzero = np.flatnonzero(np.abs(self._coeffs) > tol * scale) if scale > 0 else []
        return int(nonzero[-1]) if len(nonzero) > 0 else 0

    def is_zero(self) -> bool:
        return not np.any(self._coeffs)

    # --------------------------------------- Evaluation --------------------------------------------

    def __call__(self, x):
        return cheb_eval(self, x)

    def as_numpy(self) -> Chebyshev:
        """This polynomial as a :class:`numpy.polynomial.Chebyshev` series (same coefficients, domain and window)."""
        return Chebyshev(self._coeffs, domain=list(self.domain))

    def to_power_basis(self) -> np.ndarray:
        """Coefficients a_0, ..., a_d of this polynomial in powers of the domain variable x."""
        converted = self.as_numpy().convert(kind=Polynomial, domain=[-1, 1])
        out = np.zeros(len(self._coeffs))
        out[:len(converted.coef)] = converted.coef
        return out

    # ------------------------------------ Calculus / algebra ---------------------------------------

    def derivative(self, m: int = 1) -> ChebyshevPolynomial:
        """
        Exact m-th derivative with respect to the domain variable, computed by the Chebyshev coefficient recurrence.
        The degree bound drops by m (down to a constant).
        """
        if m < 0:
            raise ParameterError("Derivative order must be nonnegative.")
        if m == 0:
            return self
        if len(self._coeffs) <= m:
            return ChebyshevPolynomial.zero(self._map)
        return ChebyshevPolynomial(cheb.chebder(self._coeffs, m, scl=1 / self._map.half_width), self._map)

    def antiderivative(self) -> ChebyshevPolynomial:
        """The antiderivative vanishing at the left end of the domain."""
        return ChebyshevPolynomial(cheb.chebint(self._coeffs, 1, lbnd=-1, scl=self._map.half_width), self._map)

    def roots(self, real_tol: float = 1e-9) -> np.ndarray:
        """
        Real roots lying in the domain, found as eigenvalues of the Chebyshev companion matrix. Returned sorted, in
        domain coordinates. The zero polynomial is reported as having no roots.

        :param real_tol: roots whose imaginary part (in reference coordinates) is at most this are considered real
        """
        coeffs = cheb.chebtrim(self._coeffs, tol=1e-14 * max(np.max(np.abs(self._coeffs)), 1e-300))
        if len(coeffs) < 2:
            return np.empty(0)
        z = cheb.chebroots(coeffs)
        real = np.real(z[np.abs(np.imag(z)) <= real_tol * np.maximum(1, np.abs(z))])
        real = np.clip(real[np.abs(real) <= 1 + 1e-9], -1, 1)
        return np.sort(self._map.to_interval(real)) if real.size else np.empty(0)

    def restricted_to(self, a: float, b: float) -> ChebyshevPolynomial:
        """The same polynomial function, re-expanded in the Chebyshev basis of the subinterval [a, b]."""
        series = self.as_numpy().convert(kind=Chebyshev, domain=[a, b])
        coeffs = np.zeros(len(self._coeffs))
        coeffs[:len(series.coef)] = series.coef
        return ChebyshevPolynomial(coeffs, (a, b))

    def padded(self, length: int) -> ChebyshevPolynomial:
        """Same polynomial with its coefficient list padded by zeros to the given length."""
        if length <= len(self._coeffs):
            return self
        return ChebyshevPolynomial(np.concatenate([self._coeffs, np.zeros(length - len(self._coeffs))]), self._map)

    def _check_compatible(self, other: ChebyshevPolynomial):
        if not isinstance(other, ChebyshevPolynomial):
            raise ParameterError("Can only combine a ChebyshevPolynomial with another ChebyshevPolynomial.")
        if other.domain != self.domain:
            raise ParameterError("Cannot combine polynomials on different domains {} and {}."
                                 .format(self.domain, other.domain))

    def __add__(self, other):
        if isinstance(other, Real):
            coeffs = self._coeffs.copy()
            coeffs[0] += other
            return ChebyshevPolynomial(coeffs, self._map)
        self._check_compatible(other)
        return ChebyshevPolynomial(cheb.chebadd(self._coeffs, other.coeffs), self._map)

    __radd__ = __add__

    def __neg__(self):
        return ChebyshevPolynomial(-self._coeffs, self._map)

    def __sub__(self, other):
        return self + -other

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, Real):
            return ChebyshevPolynomial(self._coeffs * other, self._map)
        self._check_compatible(other)
        return ChebyshevPolynomial(cheb.chebmul(self._coeffs, other.coeffs), self._map)

    __rmul__ = __mul__

    # ------------------------------------- Loading / Saving ---------------------------------------

    def _to_dict(self):
        return {"coeffs": [float(c) for c in self._coeffs], "domain": list(self.domain)}

    @classmethod
    def _from_dict(cls, json_dict):
        return cls(json_dict["coeffs"], tuple(json_dict.get("domain", (-1.0, 1.0))))

    def __eq__(self, other):
        return isinstance(other, ChebyshevPolynomial) and self.domain == other.domain and \
            np.array_equal(self._coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.domain, self._coeffs.tobytes()))

    def __repr__(self):
        if self._map.is_reference:
            return "ChebyshevPolynomial({})".format(list(self._coeffs))
        return "ChebyshevPolynomial({}, domain={})".format(list(self._coeffs), self.domain)


def cheb_eval(p: ChebyshevPolynomial, x):
    """
    Evaluates the Chebyshev series p at x by Clenshaw's backward recurrence (numerically stable for the degrees used
    throughout this package).

    :param p: the polynomial
    :param x: point or array of points in the polynomial's domain
    :return: float for scalar x, array otherwise
    """
    if not p.affine_map.contains(x):
        raise DomainError("Evaluation point outside of the polynomial's domain {}.".format(p.domain))
    u = np.clip(p.affine_map.from_interval(np.asarray(x, dtype=float)), -1.0, 1.0)
    value = cheb.chebval(u, p.coeffs)
    return float(value) if np.ndim(value) == 0 else value


def cheb_derivative(p: ChebyshevPolynomial) -> ChebyshevPolynomial:
    """
    Exact first derivative of a Chebyshev series via the coefficient recurrence (degree bound d - 1).

    :param p: the polynomial
    """
    return p.derivative(1)
