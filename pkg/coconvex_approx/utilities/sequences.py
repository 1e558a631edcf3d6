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

from functools import wraps
from itertools import accumulate
from typing import Sequence, Iterable
import math


def multi_option_function(f):
    """
    Lets the first argument of f also be a list or tuple of values; f is then applied to each of them and a list or
    tuple of the results is returned.

    :param f: function taking at least one argument
    """
    @wraps(f)
    def wrapper(first, *args, **kwargs):
        if isinstance(first, (list, tuple)):
            return type(first)(f(x, *args, **kwargs) for x in first)
        return f(first, *args, **kwargs)
    return wrapper


def running_max(values: Iterable[float]) -> list:
    """
    Running maximum of a sequence of values, as used for the sup columns of degree tables. NaN entries are skipped
    (they do not poison later entries); a prefix consisting only of NaNs yields NaN.

    :param values: the values
    :return: list whose i-th entry is the max of the first i + 1 values
    """
    def _combine(a, b):
        if math.isnan(a):
            return b
        if math.isnan(b):
            return a
        return max(a, b)
    return list(accumulate((float(v) for v in values), _combine))


def relative_variation(values: Sequence[float]) -> float:
    """
    Spread of a collection of values relative to the largest of them: (max - min) / max. Returns 0 for a collection
    of zeros and NaN for an empty collection.

    :param values: the values (expected nonnegative)
    """
    if len(values) == 0:
        return float("nan")
    hi, lo = max(values), min(values)
    if hi == 0:
        return 0.0
    return (hi - lo) / hi
