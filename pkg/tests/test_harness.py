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

import io
import math
from types import SimpleNamespace
import pytest
from coconvex_approx.harness import DEGREE_TABLE_HEADER, Expression, ExperimentConfig, coconvex_modulus_check, \
    degree_table, exclusion_threshold, lower_bound_check, parse_exponent, parse_n_range, parse_points, \
    ratio_experiment, rows_from_sequences, spline_jackson_check, write_degree_table, write_table
from coconvex_approx.harness.experiments import format_cell
from coconvex_approx.shape import InflectionPartition
from coconvex_approx.solvers import ShapeKind, SolveStatus
from coconvex_approx.utilities import ParameterError
from coconvex_approx.weighted_spaces import WeightedNormParams


def fake_solution(error, status=SolveStatus.OPTIMAL):
    return SimpleNamespace(error=error, status=status)


class TestParsing:

    @pytest.mark.parametrize("value, expected", [("inf", math.inf), (" Infinity ", math.inf), ("2", 2.0), (1.5, 1.5)])
    def test_exponent(self, value, expected):
        assert parse_exponent(value) == expected

    def test_bad_exponent(self):
        with pytest.raises(ParameterError):
            parse_exponent("two")

    def test_n_range(self):
        assert parse_n_range("3:12") == (3, 12)
        with pytest.raises(ParameterError):
            parse_n_range("3-12")

    def test_points(self):
        assert parse_points("0.5, -0.25") == (0.5, -0.25)
        assert parse_points([1, 2]) == (1.0, 2.0)
        assert parse_points(None) == ()


class TestConfig:

    def test_defaults(self):
        cfg = ExperimentConfig()
        assert cfg.p == math.inf
        assert cfg.domain == (-1.0, 1.0)
        assert cfg.partition == InflectionPartition([0.0])
        assert cfg.constraint.kind is ShapeKind.COCONVEX
        assert cfg.n_values == range(1, 17)

    def test_coconvexity_without_inflections_is_convexity(self):
        assert ExperimentConfig(function="x^2+x").constraint.kind is ShapeKind.CONVEX

    def test_from_mapping(self):
        cfg = ExperimentConfig.from_mapping({"function": "cubic", "n_range": "2:10", "p": "2"})
        assert (cfg.m, cfg.N, cfg.p) == (2, 10, 2.0)
        assert cfg.norm == WeightedNormParams.create(p=2)

    @pytest.mark.parametrize("mapping", [
        {"colour": "red"},
        {"n_range": "5:3"},
        {"N": 65},
        {"shape": "concave"},
        {"format": "xml"},
        {"sigma": 0},
    ])
    def test_invalid_settings(self, mapping):
        with pytest.raises(ParameterError):
            ExperimentConfig.from_mapping(mapping)

    def test_load_yaml(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("function: tan_cos_exp\np: inf\nn_range: '1:8'\ninflections: '1.5'\nalpha: 0.5\n")
        cfg = ExperimentConfig.load(str(path))
        assert cfg.p == math.inf and cfg.N == 8
        assert cfg.domain == (-1.0, 2.0)
        assert cfg.inflection_points == (1.5,)
        assert cfg.partition.points == pytest.approx((2 / 3,))

    def test_load_empty_and_invalid_files(self, tmp_path):
        empty = tmp_path / "empty.yaml"
        empty.write_text("")
        assert ExperimentConfig.load(str(empty)) == ExperimentConfig()
        listing = tmp_path / "list.yaml"
        listing.write_text("- 1\n- 2\n")
        with pytest.raises(ParameterError):
            ExperimentConfig.load(str(listing))

    def test_dict_round_trip(self):
        cfg = ExperimentConfig(function="cubic", interval=(-1, 1), inflections=(0.0,), p=math.inf)
        as_dict = cfg._to_dict()
        assert as_dict["p"] == "inf"
        assert as_dict["interval"] == [-1.0, 1.0]
        assert ExperimentConfig._from_dict(as_dict) == cfg

    def test_updated_ignores_missing_overrides(self):
        cfg = ExperimentConfig(out="table.csv").updated(p=2.0, out=None)
        assert cfg.p == 2.0 and cfg.out == "table.csv"


class TestOutput:

    @pytest.mark.parametrize("value, text", [
        (True, "true"), (3, "3"), (0.1, "0.1"), (1 / 3, "0.333333333333"), (None, ""), ("ok", "ok"),
        (math.nan, "nan"), (math.inf, "inf"),
    ])
    def test_format_cell(self, value, text):
        assert format_cell(value) == text

    def test_write_table(self):
        stream = io.StringIO()
        write_table(("a", "b"), [(1, 0.5), ("x", False)], stream)
        assert stream.getvalue() == "a,b\n1,0.5\nx,false\n"


class TestDegreeTable:

    def test_rows_from_sequences(self):
        sequences = [
            (1, fake_solution(0.0), fake_solution(0.0)),
            (2, fake_solution(0.5), fake_solution(1.0)),
            (3, fake_solution(0.1), fake_solution(0.2, SolveStatus.DEGRADED)),
            (4, fake_solution(0.1, SolveStatus.DEGRADED), fake_solution(0.2, SolveStatus.UNCERTIFIED)),
        ]
        rows = rows_from_sequences(sequences, 1.0)
        assert rows[0].status == "indeterminate" and rows[0].flagged
        assert (rows[1].nsig_E, rows[1].nsig_E2, rows[1].ratio, rows[1].status) == (1.0, 2.0, 2.0, "ok")
        assert rows[2].sup_E == pytest.approx(1.0) and rows[2].status == "degraded"
        assert rows[3].status == "uncertified"

    def test_degree_table_of_a_cubic(self):
        cfg = ExperimentConfig(function="cubic", p=2, N=6)
        rows = degree_table(cfg)
        assert [row.n for row in rows] == list(range(1, 7))
        assert all(row.E <= row.E2 + 1e-8 for row in rows)
        assert rows[-1].E < 1e-10 and rows[-1].E2 < 1e-8
        assert all(row.ratio >= 1 - 1e-8 for row in rows)

        stream = io.StringIO()
        write_degree_table(rows, stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == ",".join(DEGREE_TABLE_HEADER)
        assert len(lines) == 7

    def test_rerun_writes_identical_csv(self):
        cfg = ExperimentConfig(function="tan_cos_exp", p=math.inf, N=5)
        outputs = []
        for _ in range(2):
            stream = io.StringIO()
            write_degree_table(degree_table(cfg), stream)
            outputs.append(stream.getvalue().encode())
        assert outputs[0] == outputs[1]


class TestEstimates:

    def test_exclusion_threshold(self):
        assert exclusion_threshold(ExperimentConfig(function="shifted_cubic_0.5", sigma=4)) == \
            pytest.approx(0.75 ** -0.5)
        assert exclusion_threshold(ExperimentConfig(function="shifted_cubic_0.5")) is None

    def test_convex_quadratic_has_unit_constant(self):
        report = ratio_experiment(ExperimentConfig(function="x^2+x", p=2, N=8))
        assert report.verdict == "ok"
        assert report.c_emp == pytest.approx(1.0, rel=1e-6)
        assert report.stable

    def test_vanishing_unconstrained_column_is_indeterminate(self):
        report = ratio_experiment(ExperimentConfig(function="1", p=2, N=4))
        assert report.verdict == "INDETERMINATE"
        assert math.isnan(report.c_emp)
        assert not report.stable

    def test_lower_bound_needs_one_inflection(self):
        with pytest.raises(ParameterError):
            lower_bound_check(ExperimentConfig(function="x^2"))

    def test_lower_bound_of_a_cubic(self):
        report = lower_bound_check(ExperimentConfig(function="cubic", p=2, N=6))
        assert report.norm_f == pytest.approx(math.sqrt(2 / 7), rel=1e-10)
        assert [row.flag for row in report.rows[:3]] == ["ok"] * 3
        # from n = 4 on the cubic is reproduced, so the ratio is either huge or flagged
        assert all(row.flag == "unstable" or row.ratio > 1e3 for row in report.rows[3:])
        assert math.isfinite(report.c_emp) and report.c_emp > 0
        assert report.c_first > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [2, math.inf])
    @pytest.mark.parametrize("continuity", ["C0", "C1"])
    def test_spline_jackson_ratios_are_bounded(self, p, continuity):
        report = spline_jackson_check(Expression("x^4"), 0, 3, range(4, 13), WeightedNormParams.create(p=p),
                                      k=3, continuity=continuity)
        assert report.rows[0].flag == "mesh"
        assert all(row.flag == "ok" for row in report.rows[1:])
        assert report.bounded
        assert math.isfinite(report.c_emp)
        for row in report.rows[1:]:
            assert row.unweighted_modulus == pytest.approx(row.modulus, rel=1e-6)

    def test_spline_jackson_argument_checks(self):
        norm = WeightedNormParams.create(p=2)
        with pytest.raises(ParameterError):
            spline_jackson_check(lambda x: x ** 4, 1, 3, [8], norm)
        with pytest.raises(ParameterError):
            spline_jackson_check(Expression("x^4"), 0, 0, [8], norm)

    def test_modulus_check_needs_reference_interval(self):
        with pytest.raises(ParameterError):
            coconvex_modulus_check(ExperimentConfig(function="tan_cos_exp"))
