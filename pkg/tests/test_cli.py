import dataclasses
import json
import re

import pytest

from slitkit import cli
from slitkit.errors import DomainError
from slitkit.svgfig import plot_map


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScalarCommands:
    def test_squeeze_prints_plain_value(self, capsys):
        code, out, _ = run_cli(capsys, ["squeeze", "--r", "0.25", "--z", "0.5,0"])
        assert code == 0
        assert out == "0.5\n"

    def test_squeeze_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, ["squeeze", "--r", "0.25", "--z", "0.5,0", "--format", "json"]
        )
        assert code == 0
        assert json.loads(out) == {"value": 0.5}

    def test_radii_recovers_modulus(self, capsys):
        code, out, _ = run_cli(capsys, ["radii", "--r", "0.25", "--z", "0.3,0.4"])
        assert code == 0
        assert abs(float(out) - 0.5) < 1e-12

    def test_map_value(self, capsys):
        code, out, _ = run_cli(
            capsys, ["map", "--r", "0.5", "--x", "0.75", "--z", "0.5,0"]
        )
        assert code == 0
        re_part, im_part = out.strip().split(",")
        assert abs(float(re_part) - (-0.75)) < 1e-9
        assert abs(float(im_part)) < 1e-12

    def test_prime_json_parses(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["prime", "--r", "0.5", "--z", "0.8,0.1", "--a", "0.9,-0.2",
             "--format", "json"],
        )
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"re", "im"}


class TestErrorPaths:
    def test_numerical_error_exits_one(self, capsys):
        code, _, err = run_cli(capsys, ["squeeze", "--r", "2.0", "--z", "0.5,0"])
        assert code == 1
        assert "r must lie" in err

    def test_usage_error_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["squeeze", "--r", "0.25"])
        assert exc.value.code == 1

    def test_unknown_subcommand_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == 1

    def test_malformed_complex_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["squeeze", "--r", "0.25", "--z", "banana"])
        assert exc.value.code == 1

    def test_bad_env_tolerance_exits_one(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.ENV_TRUNC_TOL, "not-a-number")
        code, _, err = run_cli(capsys, ["squeeze", "--r", "0.25", "--z", "0.5,0"])
        assert code == 1
        assert cli.ENV_TRUNC_TOL in err


class TestDefaults:
    def test_env_truncation_override(self, capsys, monkeypatch):
        _, exact, _ = run_cli(capsys, ["map", "--r", "0.5", "--x", "0.75", "--z", "0.6,0.2"])
        monkeypatch.setenv(cli.ENV_TRUNC_TOL, "1e-4")
        _, coarse, _ = run_cli(capsys, ["map", "--r", "0.5", "--x", "0.75", "--z", "0.6,0.2"])
        assert exact != coarse
        assert abs(float(exact.split(",")[0]) - float(coarse.split(",")[0])) < 1e-3

    def test_explicit_flag_beats_environment(self, capsys, monkeypatch):
        _, exact, _ = run_cli(capsys, ["map", "--r", "0.5", "--x", "0.75", "--z", "0.6,0.2"])
        monkeypatch.setenv(cli.ENV_TRUNC_TOL, "1e-4")
        _, forced, _ = run_cli(
            capsys,
            ["map", "--r", "0.5", "--x", "0.75", "--z", "0.6,0.2",
             "--trunc-tol", "1e-12"],
        )
        assert forced == exact

    def test_threads_flag_does_not_change_output(self, capsys):
        _, one, _ = run_cli(capsys, ["squeeze", "--r", "0.25", "--z", "0.7,0.1"])
        _, four, _ = run_cli(
            capsys, ["squeeze", "--r", "0.25", "--z", "0.7,0.1", "--threads", "4"]
        )
        assert one == four


class TestCertifyExitCodes:
    def test_failed_certificate_exits_two(self, capsys, monkeypatch, tmp_path,
                                          std_certificate):
        failing = dataclasses.replace(std_certificate, tol=1e9, passed=False)
        monkeypatch.setattr(cli, "certify_degenerate", lambda cfg: failing)
        out_path = tmp_path / "cert.json"
        code, _, _ = run_cli(
            capsys,
            ["certify", "--r", "0.25", "--x0", "0.8", "--out", str(out_path)],
        )
        assert code == 2
        assert json.loads(out_path.read_text())["passed"] is False

    def test_evidence_refuses_failed_certificate(self, capsys, monkeypatch,
                                                 std_certificate):
        failing = dataclasses.replace(std_certificate, tol=1e9, passed=False)
        monkeypatch.setattr(cli, "certify_degenerate", lambda cfg: failing)
        code, out, err = run_cli(capsys, ["evidence", "--r", "0.25", "--x0", "0.8"])
        assert code == 2
        assert out == ""
        assert "failed" in err


class TestPlot:
    def test_document_structure(self, capsys, tmp_path):
        out_path = tmp_path / "fx.svg"
        code, _, _ = run_cli(
            capsys, ["plot", "--r", "0.5", "--x", "0.75", "--out", str(out_path)]
        )
        assert code == 0
        doc = out_path.read_text()
        assert doc.startswith("<svg ")
        assert doc.count('class="grid-image"') == 20
        assert 'class="slit"' in doc

    def test_curves_densely_sampled_with_fixed_precision(self):
        doc = plot_map(0.5, 0.75, grid=(2, 2))
        assert doc.count('class="grid-image"') == 4
        for match in re.finditer(r'points="([^"]+)"', doc):
            pairs = match.group(1).split()
            assert len(pairs) >= 256
            assert all(re.fullmatch(r"-?\d+\.\d\d,-?\d+\.\d\d", p) for p in pairs)

    def test_byte_identical_across_runs(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run_cli(capsys, ["plot", "--r", "0.5", "--x", "0.75", "--out", str(a)])
        run_cli(capsys, ["plot", "--r", "0.5", "--x", "0.75", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_degenerate_grid_rejected_below_two(self):
        with pytest.raises(DomainError):
            plot_map(0.5, 0.75, grid=(1, 5))
