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

import json
import logging
import pytest
from coconvex_approx.harness.cli import EXIT_FAILURE, EXPERIMENT_ALIASES, EXPERIMENTS, build_parser, config_from_args, \
    main


def read_csv(text):
    return [line.split(",") for line in text.strip().splitlines()]


class TestArguments:

    def test_flags_override_config_file(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("function: cubic\np: 2\ndegree: 6\n")
        args = build_parser().parse_args(["approx", "--config", str(path), "--degree", "4", "--n-range", "2:5"])
        cfg = config_from_args(args)
        assert (cfg.function, cfg.p, cfg.degree, cfg.m, cfg.N) == ("cubic", 2.0, 4, 2, 5)

    def test_interval_and_inflections(self):
        args = build_parser().parse_args(["norm", "--fn", "x", "--interval", "0,4", "--inflections", "1,3"])
        cfg = config_from_args(args)
        assert cfg.domain == (0.0, 4.0)
        assert cfg.partition.points == pytest.approx((0.5, -0.5))

    @pytest.mark.parametrize("name", ["table", "ratio", "thm212", "jackson", "example28"])
    def test_short_experiment_names(self, name):
        args = build_parser().parse_args(["experiment", name])
        assert EXPERIMENT_ALIASES.get(args.name, args.name) in EXPERIMENTS

    def test_literal_mode_alias(self):
        args = build_parser().parse_args(["experiment", "example28", "--mode", "paper-literal"])
        assert config_from_args(args).mode == "literal"

    def test_unknown_command_exits(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["integrate"])


class TestCommands:

    def test_norm_to_stdout(self, capsys):
        assert main(["norm", "--fn", "1", "--p", "2"]) == 0
        rows = dict(read_csv(capsys.readouterr().out)[1:])
        assert rows["value"] == "1.41421356237"
        assert rows["quasi_norm"] == "false"

    def test_approx_to_json_file(self, tmp_path):
        out = tmp_path / "approx.json"
        code = main(["approx", "--fn", "x^3", "--degree", "3", "--shape", "none", "--p", "inf", "--format", "json",
                     "--out", str(out)])
        assert code == 0
        result = json.loads(out.read_text())
        assert result["error"] == pytest.approx(0.25, abs=1e-3)
        assert result["status"] == "ok"
        assert {"c0", "c1", "c2"} <= set(result) and "c3" not in result

    def test_coconvex_approx_from_config(self, tmp_path):
        config = tmp_path / "settings.yaml"
        config.write_text("function: cubic\np: 2\nformat: json\n")
        out = tmp_path / "result.json"
        assert main(["approx", "--config", str(config), "--out", str(out)]) == 0
        result = json.loads(out.read_text())
        assert result["error"] < 1e-8
        assert result["shape"] == "ShapeConstraint.coconvex([0.0])"

    def test_table_rerun_is_byte_identical(self, tmp_path):
        first, second = tmp_path / "first.csv", tmp_path / "second.csv"
        for out in (first, second):
            args = ["experiment", "table", "--fn", "cubic", "--p", "2", "--n-range", "1:5", "--out", str(out)]
            assert main(args) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_stieltjes(self, capsys):
        assert main(["stieltjes", "--fn", "2", "--interval", "0,3"]) == 0
        rows = dict(read_csv(capsys.readouterr().out)[1:])
        assert rows["verdict"] == "INTEGRABLE"
        assert float(rows["value"]) == pytest.approx(6.0)

    def test_fejer_table(self, capsys):
        assert main(["korovkin", "fejer", "--fn", "sin(x)", "--n-range", "1:8"]) == 0
        rows = read_csv(capsys.readouterr().out)
        assert rows[0] == ["n", "sup_error"]
        assert [int(row[0]) for row in rows[1:]] == list(range(1, 9))
        assert float(rows[-1][1]) == pytest.approx(1 / 8, rel=1e-8)

    def test_lower_bound_by_short_name(self, capsys):
        assert main(["experiment", "thm212", "--fn", "cubic", "--p", "2", "--n-range", "1:4"]) == 0
        assert len(read_csv(capsys.readouterr().out)) > 1

    def test_modulus(self, capsys):
        assert main(["modulus", "--fn", "x^2", "--i", "2", "--t", "0.3", "--step-mode", "constant"]) == 0
        rows = dict(read_csv(capsys.readouterr().out)[1:])
        assert float(rows["value"]) == pytest.approx(2 * 0.09, rel=1e-10)


class TestFailures:

    def test_bad_expression(self, caplog):
        with caplog.at_level(logging.ERROR):
            assert main(["norm", "--fn", "2x"]) == EXIT_FAILURE
        assert "ExpressionSyntaxError" in caplog.text

    def test_inadmissible_weight(self):
        assert main(["norm", "--fn", "x", "--alpha", "-1.5", "--p", "2"]) == EXIT_FAILURE

    def test_spline_check_off_the_reference_interval(self):
        assert main(["experiment", "jackson", "--fn", "tan_cos_exp"]) == EXIT_FAILURE

    def test_lower_bound_without_single_inflection(self):
        assert main(["experiment", "lower-bound", "--fn", "x^2"]) == EXIT_FAILURE
        assert main(["experiment", "thm212", "--fn", "x^2"]) == EXIT_FAILURE
