import json
import math
import os

import pytest

from heishardy.cli import (
    EXIT_CONFIG,
    EXIT_NUMERIC,
    EXIT_OK,
    main,
    parse_function_spec,
    parse_weight_spec,
)


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def run_json(capsys, *argv):
    status, out, err = run_cli(capsys, *argv)
    assert status == EXIT_OK, err
    return json.loads(out)


class TestConstantsCommand:
    def test_classical_row(self, capsys):
        doc = run_json(capsys, "constants", "--kind", "hardy", "--n", "1",
                       "--p", "2", "--pbar1", "2", "--pbar2", "2")
        row = doc["results"][0]
        assert row["constant"] == 2.0
        assert row["verdict"] == "bounded"

    def test_mixed_exponent_row(self, capsys):
        doc = run_json(capsys, "constants", "--kind", "hardy", "--n", "1",
                       "--p", "2", "--pbar1", "4", "--pbar2", "2")
        assert abs(doc["results"][0]["constant"] - 2.0 * math.sqrt(2 * math.pi)) < 1e-10

    def test_unbounded_verdict_rendered_not_errored(self, capsys):
        status, out, err = run_cli(capsys, "constants", "--kind", "whardy",
                                   "--weight", "power:c=1,beta=0", "--n", "1", "--p", "2")
        assert status == EXIT_OK
        row = json.loads(out)["results"][0]
        assert row["verdict"] == "unbounded"
        assert row["constant"] is None

    def test_grid_expansion(self, capsys):
        doc = run_json(capsys, "constants", "--kind", "hardy,dual-hardy",
                       "--n", "1,2", "--p", "2,5")
        assert len(doc["results"]) == 8

    def test_json_schema_top_level(self, capsys):
        doc = run_json(capsys, "constants", "--kind", "hardy")
        assert set(doc) >= {"config", "results", "provenance"}
        assert doc["provenance"]["version"]


class TestVerifySharpCommand:
    def test_default_hardy_converges(self, capsys):
        status, out, err = run_cli(capsys, "verify-sharp", "--kind", "hardy",
                                   "--eps-grid", "0.1,0.01,0.001", "--trials", "3")
        assert status == EXIT_OK
        doc = json.loads(out)
        row = doc["results"][0]
        assert row["converged"] and row["sandwich_ok"]
        gaps = [e["relative_gap"] for e in row["table"]]
        assert gaps[-1] <= 5e-4

    def test_csv_columns(self, capsys):
        status, out, err = run_cli(capsys, "verify-sharp", "--kind", "hardy",
                                   "--eps-grid", "0.1,0.01", "--trials", "2",
                                   "--format", "csv")
        assert status == EXIT_OK
        lines = [l for l in out.splitlines() if not l.startswith("#")]
        header = lines[0].split(",")
        for col in ("epsilon", "ratio", "constant", "relative_gap", "error_estimate"):
            assert col in header

    def test_unbounded_config_reported(self, capsys):
        status, out, err = run_cli(capsys, "verify-sharp", "--kind", "whardy",
                                   "--weight", "power:beta=0", "--p", "2",
                                   "--eps-grid", "0.1", "--trials", "1")
        assert status == EXIT_OK
        assert json.loads(out)["results"][0]["verdict"] == "unbounded"

    def test_unconverged_grid_exits_3_with_offending_row(self, capsys):
        # a single coarse epsilon leaves the final gap far above 5%, which
        # fails the convergence check and must identify the offending row
        status, out, err = run_cli(capsys, "verify-sharp", "--kind", "hardy",
                                   "--eps-grid", "0.9", "--trials", "1")
        assert status == EXIT_NUMERIC
        doc = json.loads(out)
        assert doc["offending"]["kind"] == "hardy"
        assert doc["offending"]["relative_gap"] > 0.05


class TestApplyCommand:
    def test_hardy_power(self, capsys):
        doc = run_json(capsys, "apply", "--kind", "hardy", "--function", "power:1",
                       "--n", "1", "--radii", "2")
        assert abs(doc["results"][0]["value"] - 1.6) < 1e-8

    def test_dual_hardy_power(self, capsys):
        doc = run_json(capsys, "apply", "--kind", "dual-hardy",
                       "--function", "power:-2", "--n", "1", "--radii", "2")
        assert abs(doc["results"][0]["value"] - 0.5) < 1e-8

    def test_zero_function(self, capsys):
        doc = run_json(capsys, "apply", "--kind", "hardy", "--function", "zero",
                       "--radii", "1,2,3")
        assert all(row["value"] == 0.0 for row in doc["results"])

    def test_multiple_radii_ordered(self, capsys):
        doc = run_json(capsys, "apply", "--kind", "hardy", "--function", "power:1",
                       "--radii", "1,2,4")
        assert [row["r"] for row in doc["results"]] == [1.0, 2.0, 4.0]


class TestNormCommand:
    def test_exponential(self, capsys):
        doc = run_json(capsys, "norm", "--function", "exp:1", "--p", "2", "--pbar1", "2")
        assert abs(doc["results"][0]["norm"] - 3.847649490485592) < 1e-6

    def test_extremal_family(self, capsys):
        doc = run_json(capsys, "norm", "--function", "power:-2.01,lo=1",
                       "--p", "2", "--pbar1", "2")
        assert abs(doc["results"][0]["norm"] - 44.428829381583662) < 1e-4

    def test_zero(self, capsys):
        doc = run_json(capsys, "norm", "--function", "zero")
        assert doc["results"][0]["norm"] == 0.0

    def test_divergent_verdict(self, capsys):
        status, out, err = run_cli(capsys, "norm", "--function", "power:0")
        assert status == EXIT_OK
        row = json.loads(out)["results"][0]
        assert row["verdict"] == "divergent norm"
        assert row["norm"] is None


class TestGeomCheckCommand:
    def test_passes_for_both_spaces(self, capsys):
        status, out, err = run_cli(capsys, "geom-check", "--n", "1,2",
                                   "--triples", "20000", "--mc-count", "50000",
                                   "--seed", "42")
        assert status == EXIT_OK
        doc = json.loads(out)
        assert all(row["all_pass"] for row in doc["results"])

    def test_volume_expectations(self, capsys):
        doc = run_json(capsys, "geom-check", "--n", "1", "--triples", "1000",
                       "--mc-count", "200000", "--seed", "1")
        row = doc["results"][0]
        assert abs(row["mc_volume_expected"] - math.pi**2 / 2.0) < 1e-12


class TestConfigHandling:
    def test_unknown_kind_exits_2(self, capsys):
        status, out, err = run_cli(capsys, "constants", "--kind", "nope")
        assert status == EXIT_CONFIG
        assert "invalid configuration" in err

    def test_bad_exponent_exits_2(self, capsys):
        status, _, err = run_cli(capsys, "constants", "--p", "1")
        assert status == EXIT_CONFIG

    def test_bad_eps_grid_exits_2(self, capsys):
        status, _, err = run_cli(capsys, "verify-sharp", "--eps-grid", "0.01,0.1")
        assert status == EXIT_CONFIG

    def test_bad_function_exits_2(self, capsys):
        status, _, err = run_cli(capsys, "apply", "--function", "sinc:1")
        assert status == EXIT_CONFIG
        assert json.loads(err)["error"] == "invalid configuration"

    def test_hh_seed_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("HH_SEED", "777")
        doc = run_json(capsys, "constants", "--kind", "hardy")
        assert doc["provenance"]["seed"] == 777

    def test_explicit_seed_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("HH_SEED", "777")
        doc = run_json(capsys, "constants", "--kind", "hardy", "--seed", "5")
        assert doc["provenance"]["seed"] == 5


class TestReproducibility:
    def test_byte_identical_reports(self, capsys):
        args = ("verify-sharp", "--kind", "hardy", "--eps-grid", "0.1,0.01",
                "--trials", "2", "--seed", "11")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_out_file_written(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        status, out, _ = run_cli(capsys, "constants", "--kind", "hardy",
                                 "--out", str(path))
        assert status == EXIT_OK
        assert out == ""
        doc = json.loads(path.read_text())
        assert doc["results"][0]["constant"] == 2.0


class TestSpecParsers:
    def test_weight_spec_forms(self):
        assert parse_weight_spec("power:c=2,beta=3") == (2.0, 3.0)
        assert parse_weight_spec("power:2") == (1.0, 2.0)
        with pytest.raises(Exception):
            parse_weight_spec("gauss:1")

    def test_function_spec_mixture(self):
        f = parse_function_spec("power:-3,lo=1+exp:2,alpha=1")
        assert abs(f.eval(0.5) - 0.5 * math.exp(-1.0)) < 1e-15
        assert abs(f.eval(2.0) - (2.0**-3 + 2.0 * math.exp(-4.0))) < 1e-14

    def test_function_spec_zero(self):
        assert parse_function_spec("zero").is_zero
