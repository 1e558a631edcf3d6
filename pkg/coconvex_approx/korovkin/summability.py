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
Module containing nonnegative summability matrices and A-statistical limits of finite sequence prefixes. A limit
verdict is always a statement about the prefix at hand, reported together with the density trace it was based on.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
import numpy as np
from ..utilities import ParameterError

#: densities below this over the last quartile of rows count as vanishing
DENSITY_THRESHOLD = 1e-3
#: relative amount the densities of the last quartile may rise above the value the quartile starts with
DENSITY_RISE_TOLERANCE = 0.1


class SummabilityMatrix:

    """
    A nonnegative matrix A = (a_jn), truncated to its first ``width`` rows and columns (rows j and columns n both
    run from 1). Cesaro and identity matrices are held in structured form, so truncations with millions of rows are
    cheap; other matrices are stored densely.

    :param kind: "cesaro", "identity" or "dense"
    :param width: truncation width
    :param entries: the dense entries (only for kind "dense")
    """

    def __init__(self, kind: str, width: int, entries: np.ndarray | None = None):
        if kind not in ("cesaro", "identity", "dense"):
            raise ParameterError("Unknown summability matrix kind {}.".format(kind))
        if width < 1:
            raise ParameterError("The truncation width must be positive.")
        self.kind = kind
        self.width = int(width)
        self.entries = entries

    @classmethod
    def cesaro(cls, width: int) -> SummabilityMatrix:
        """The Cesaro matrix C_1: a_jn = 1/j for n <= j, 0 otherwise."""
        return cls("cesaro", width)

    @classmethod
    def identity(cls, width: int) -> SummabilityMatrix:
        return cls("identity", width)

    @classmethod
    def from_array(cls, entries) -> SummabilityMatrix:
        """
        A user-supplied square matrix (row j of the array is row j + 1 of A).

        :param entries: square array of nonnegative entries
        """
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ParameterError("A summability matrix must be given as a square array.")
        if np.any(entries < 0) or not np.all(np.isfinite(entries)):
            raise ParameterError("Summability matrix entries must be finite and nonnegative.")
        entries.flags.writeable = False
        return cls("dense", entries.shape[0], entries)

    def entry(self, j: int, n: int) -> float:
        if not (1 <= j <= self.width and 1 <= n <= self.width):
            raise ParameterError("Index ({}, {}) outside of the truncation.".format(j, n))
        if self.kind == "cesaro":
            return 1.0 / j if n <= j else 0.0
        if self.kind == "identity":
            return 1.0 if n == j else 0.0
        return float(self.entries[j - 1, n - 1])

    def densities(self, indicator) -> np.ndarray:
        """
        The row sums delta_j = sum_{n in K} a_jn for the index set K given by a boolean indicator over n = 1..width.

        :param indicator: boolean (or 0/1) array of length width
        :return: array of delta_1, ..., delta_width
        """
        indicator = np.asarray(indicator, dtype=float)
        if len(indicator) != self.width:
            raise ParameterError("Indicator has length {}, the matrix width is {}.".format(len(indicator), self.width))
        if self.kind == "cesaro":
            return np.cumsum(indicator) / np.arange(1, self.width + 1)
        if self.kind == "identity":
            return indicator.copy()
        return self.entries @ indicator

    def row_sums(self) -> np.ndarray:
        return self.densities(np.ones(self.width))

    def regularity_report(self, columns: int = 10) -> dict:
        """
        Regularity diagnostics at the truncation: how far the row sums are from 1, and how large the entries of the
        first few columns still are in the last row (they should tend to 0).

        :param columns: number of leading columns inspected
        """
        columns = min(columns, self.width)
        last_row = [self.entry(self.width, n) for n in range(1, columns + 1)]
        return {
            "kind": self.kind,
            "width": self.width,
            "max_row_sum_deviation": float(np.max(np.abs(self.row_sums() - 1))),
            "last_row_leading_entries": float(max(last_row)),
            "nonnegative": True
        }

    def __repr__(self):
        return "SummabilityMatrix({}, width={})".format(self.kind, self.width)


@dataclass(frozen=True)
class StatisticalLimitResult:

    """
    Outcome of :func:`st_A_limit`.

    :param verdict: "ACCEPT" or "REJECT"
    :param densities: the trace delta_1, ..., delta_width
    :param tail_max: maximum density over the last quartile of rows
    :param candidate: the candidate limit L
    :param eps: the tolerance epsilon
    """

    verdict: str
    densities: np.ndarray
    tail_max: float
    candidate: float
    eps: float

    @property
    def accepted(self) -> bool:
        return self.verdict == "ACCEPT"


def _last_quartile(values: np.ndarray) -> np.ndarray:
    return values[(3 * len(values)) // 4:]


def st_A_limit(seq: Sequence[float], A: SummabilityMatrix, L: float, eps: float,
               threshold: float = DENSITY_THRESHOLD, rise_tol: float = DENSITY_RISE_TOLERANCE) \
        -> StatisticalLimitResult:
    """
    Decides on a finite prefix whether L is the A-statistical limit of the sequence: computes the A-density delta_j of
    the indices n with |seq_n - L| >= eps for every row j, and accepts iff the densities over the last quartile of rows
    stay below the threshold and never rise more than rise_tol (relative) above the density the quartile starts with.

    :param seq: the sequence seq_1, seq_2, ... (at least A.width terms; only the first A.width are used)
    :param A: the summability matrix
    :param L: candidate limit
    :param eps: positive tolerance
    :param threshold: density threshold
    :param rise_tol: relative rise of the densities allowed over the last quartile
    """
    seq = np.asarray(seq, dtype=float)
    if len(seq) < A.width:
        raise ParameterError("The sequence has {} terms, fewer than the matrix width {}.".format(len(seq), A.width))
    if not eps > 0:
        raise ParameterError("eps must be positive.")
    densities = A.densities(np.abs(seq[:A.width] - L) >= eps)
    tail = _last_quartile(densities)
    tail_max = float(np.max(tail))
    accepted = tail_max < threshold and tail_max <= tail[0] * (1 + rise_tol) + 1e-12
    return StatisticalLimitResult("ACCEPT" if accepted else "REJECT", densities, tail_max, L, eps)


def ordinary_limit_verdict(seq: Sequence[float], L: float, eps: float) -> str:
    """
    Finite-prefix reading of an ordinary limit: "ACCEPT" iff every term of the last quartile is within eps of L.

    :param seq: the sequence
    :param L: candidate limit
    :param eps: positive tolerance
    """
    tail = _last_quartile(np.asarray(seq, dtype=float))
    return "ACCEPT" if np.all(np.abs(tail - L) < eps) else "REJECT"
