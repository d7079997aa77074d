"""CLI surface: subcommands, formats, exit codes, output stability."""

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hcb2.cli import EXIT_INVALID, EXIT_OK, EXIT_UNDEFINED, SCAN_FIELDS, main

BETA_C = 2.0 * math.log(3.0)


def run_cli(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestSolve:
    def test_condensed_record(self, capsys):
        rc, out, _ = run_cli(capsys, ["solve", "--t", "-1", "--U", "0.25", "--beta", "4"])
        assert rc == EXIT_OK
        doc = json.loads(out)
        assert set(doc) == {"params", "results", "residuals"}
        res = doc["results"]
        assert res["phase"] == "condensed"
        assert res["lambda_mod"] == pytest.approx(0.447430508294, abs=1e-9)
        assert res["rho0"] == pytest.approx(2 * res["lambda_mod"] ** 2, abs=1e-9)
        assert doc["residuals"]["gap"] < 1e-12
        assert doc["residuals"]["self_consistency"] < 1e-10
        assert isinstance(res["fixed_points"], list) and len(res["fixed_points"]) == 1

    def test_strong_coupling_is_normal(self, capsys):
        rc, out, _ = run_cli(capsys, ["solve", "--t", "-1", "--U", "1.5", "--beta", "50"])
        assert rc == EXIT_OK
        res = json.loads(out)["results"]
        assert res["phase"] == "normal"
        assert res["rho0"] == 0.0
        assert res["regime"] == "no_condensation"

    def test_invalid_regime_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, ["solve", "--t", "0.5", "--U", "0.25", "--beta", "4"])
        assert rc == EXIT_INVALID
        assert "error" in err

    def test_ground_state_via_beta_inf(self, capsys):
        rc, out, _ = run_cli(capsys, ["solve", "--t", "-1", "--U", "0.6", "--beta", "inf"])
        assert rc == EXIT_OK
        doc = json.loads(out)
        assert doc["params"]["beta"] == "inf"
        assert doc["results"]["lambda_mod"] == pytest.approx(0.4, abs=1e-12)
        assert doc["results"]["rho0"] == pytest.approx(0.32, abs=1e-12)

    def test_temperature_flag_equivalent(self, capsys):
        rc1, out1, _ = run_cli(capsys, ["solve", "--t", "-1", "--U", "0.25", "--beta", "4"])
        rc2, out2, _ = run_cli(capsys, ["solve", "--t", "-1", "--U", "0.25", "--temperature", "0.25"])
        assert rc1 == rc2 == EXIT_OK
        assert out1 == out2


class TestScan:
    def test_csv_crossing_critical_beta(self, capsys):
        betas = f"{BETA_C * 0.99},{BETA_C * 1.01}"
        rc, out, _ = run_cli(capsys, ["scan", "--t", "-1", "--U", "0.25", "--beta", betas])
        assert rc == EXIT_OK
        rows = parse_csv(out)
        assert [r["phase"] for r in rows] == ["normal", "condensed"]
        assert float(rows[0]["rho0"]) == 0.0
        assert float(rows[1]["rho0"]) > 0.0

    def test_header_is_fixed(self, capsys):
        _, out, _ = run_cli(capsys, ["scan", "--t", "-1", "--U", "0.25", "--beta", "4"])
        assert out.splitlines()[0] == ",".join(SCAN_FIELDS)

    def test_single_cell_matches_solve(self, capsys):
        rc, scan_out, _ = run_cli(capsys, ["scan", "--t", "-1", "--U", "0.25", "--beta", "4"])
        row = parse_csv(scan_out)[0]
        rc2, solve_out, _ = run_cli(capsys, ["solve", "--t", "-1", "--U", "0.25", "--beta", "4"])
        res = json.loads(solve_out)["results"]
        assert float(row["lambda_mod"]) == res["lambda_mod"]
        assert float(row["rho0"]) == res["rho0"]
        assert float(row["eta"]) == res["eta"]

    def test_row_order_U_outer_beta_inner(self, capsys):
        rc, out, _ = run_cli(capsys, ["scan", "--t", "-1", "--U", "0.2,0.3", "--beta", "1,4"])
        rows = parse_csv(out)
        assert [(r["U"], r["beta"]) for r in rows] == [
            ("0.2", "1"), ("0.2", "4"), ("0.3", "1"), ("0.3", "4"),
        ]

    def test_zero_coupling_frequencies_degenerate(self, capsys):
        rc, out, _ = run_cli(capsys, ["scan", "--t", "-1", "--U", "0", "--beta", "1,4"])
        for row in parse_csv(out):
            assert row["xi_plus"] == row["xi_minus"]

    def test_range_syntax(self, capsys):
        rc, out, _ = run_cli(capsys, ["scan", "--t", "-1", "--U", "0.25", "--beta", "1:4:4"])
        rows = parse_csv(out)
        assert [r["beta"] for r in rows] == ["1", "2", "3", "4"]

    def test_partial_failure_keeps_exit_zero(self, capsys):
        rc, out, _ = run_cli(capsys, ["scan", "--t", "-1", "--U=-0.1,0.25", "--beta", "4"])
        assert rc == EXIT_OK
        rows = parse_csv(out)
        assert rows[0]["error"] != "" and rows[0]["phase"] == ""
        assert rows[1]["error"] == "" and rows[1]["phase"] == "condensed"

    def test_all_rows_failing_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, ["scan", "--t", "0.5", "--U", "0.25", "--beta", "1,4"])
        assert rc == EXIT_INVALID

    def test_json_matches_csv_field_for_field(self, capsys, tmp_path):
        args = ["scan", "--t", "-1", "--U", "0.2,0.25", "--beta", "1,4"]
        rc, csv_out, _ = run_cli(capsys, args + ["--format", "csv"])
        rc2, json_out, _ = run_cli(capsys, args + ["--format", "json"])
        rows = parse_csv(csv_out)
        jrows = json.loads(json_out)["results"]
        assert len(rows) == len(jrows)
        for crow, jrow in zip(rows, jrows):
            for key in ("U", "beta", "lambda_mod", "rho0", "eta", "xi_plus", "xi_minus",
                        "hbar_plus", "hbar_minus"):
                assert float(crow[key]) == float(jrow[key]), key
            assert crow["phase"] == jrow["phase"]

    def test_byte_stability(self, capsys, tmp_path):
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        args = ["scan", "--t", "-1", "--U", "0.1:0.4:4", "--beta", "1:5:5", "--format", "csv"]
        assert main(args + ["--out", str(out1)]) == EXIT_OK
        assert main(args + ["--out", str(out2)]) == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()


class TestCritical:
    def test_values(self, capsys):
        rc, out, _ = run_cli(capsys, ["critical", "--t", "-1", "--U", "0.25"])
        assert rc == EXIT_OK
        res = json.loads(out)["results"]
        assert res["beta_c"] == pytest.approx(BETA_C, abs=1e-6)
        assert res["kappa"] == pytest.approx(0.461292, abs=1e-6)
        assert res["case_a_possible"] is True

    def test_kappa_only(self, capsys):
        rc, out, _ = run_cli(capsys, ["critical"])
        assert rc == EXIT_OK
        doc = json.loads(out)
        assert doc["results"]["kappa"] == pytest.approx(0.461292, abs=1e-6)
        assert doc["residuals"]["kappa_equation"] < 1e-12

    def test_undefined_beyond_case_a(self, capsys):
        rc, out, _ = run_cli(capsys, ["critical", "--t", "-1", "--U", "0.6"])
        assert rc == EXIT_OK
        res = json.loads(out)["results"]
        assert res["beta_c"] == "undefined"
        assert res["case_a_possible"] is False


class TestFluct:
    def test_table_at_condensed_point(self, capsys):
        rc, out, _ = run_cli(capsys, ["fluct", "--t", "-1", "--U", "0.25", "--beta", "4"])
        assert rc == EXIT_OK
        res = json.loads(out)["results"]
        assert len(res["pairs"]) == 4
        freqs = [p["frequency"] for p in res["pairs"]]
        assert freqs[0] == freqs[1] and freqs[2] == freqs[3]
        assert freqs[0] > freqs[2]
        assert res["max_cross_moment"] < 1e-12

    def test_csv_format(self, capsys):
        rc, out, _ = run_cli(capsys, ["fluct", "--t", "-1", "--U", "0.25", "--beta", "4",
                                      "--format", "csv"])
        rows = parse_csv(out)
        assert [r["pair"] for r in rows] == ["02", "13", "03", "12"]
        assert [r["generator"] for r in rows] == ["Q-", "Q+", "Q-", "Q+"]

    def test_normal_point_exits_3(self, capsys):
        rc, _, err = run_cli(capsys, ["fluct", "--t", "-1", "--U", "0.25", "--beta", "1"])
        assert rc == EXIT_UNDEFINED
        assert "not condensed" in err

    def test_near_critical_hbar_minus_small(self, capsys):
        rc, out, _ = run_cli(capsys, ["fluct", "--t", "-1", "--U", "0.25",
                                      "--beta", str(BETA_C * 1.001)])
        assert rc == EXIT_OK
        res = json.loads(out)["results"]
        by_label = {p["pair"]: p for p in res["pairs"]}
        assert by_label["03"]["hbar"] < 0.1
        assert by_label["12"]["hbar"] < 0.1


class TestOracle:
    def test_csv_columns_and_values(self, capsys):
        rc, out, _ = run_cli(capsys, ["oracle", "--t", "-1", "--U", "0.25", "--beta", "4",
                                      "--n-max", "3"])
        assert rc == EXIT_OK
        rows = parse_csv(out)
        assert len(rows) == 3
        assert float(rows[0]["zero_mode_density"]) == pytest.approx(1.0, abs=1e-9)
        for row in rows:
            assert float(row["residual_type_exchange"]) < 1e-10
            assert float(row["residual_particle_hole"]) < 1e-10
            assert float(row["residual_gauge"]) < 1e-10
            assert float(row["mf_rho0"]) == pytest.approx(0.400388119505, abs=1e-9)

    def test_cap_violation_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, ["oracle", "--t", "-1", "--U", "0.25", "--beta", "4",
                                      "--n-max", "7"])
        assert rc == EXIT_INVALID

    def test_json_format(self, capsys):
        rc, out, _ = run_cli(capsys, ["oracle", "--t", "-1", "--U", "0.25", "--beta", "4",
                                      "--n-max", "2", "--format", "json"])
        doc = json.loads(out)
        assert len(doc["results"]) == 2
        assert doc["residuals"]["max_symmetry"] < 1e-10


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hcb2", "solve", "--t", "-1", "--U", "0.25", "--beta", "4"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["results"]["phase"] == "condensed"

    def test_output_file(self, tmp_path):
        target = tmp_path / "point.json"
        rc = main(["solve", "--t", "-1", "--U", "0.25", "--beta", "4", "--out", str(target)])
        assert rc == EXIT_OK
        assert json.loads(target.read_text())["results"]["phase"] == "condensed"
