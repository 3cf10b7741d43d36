"""CLI surface: output contracts, formats, determinism, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from pleijel import reference
from pleijel.cli import main
from pleijel.constants import gamma_tilde_interval


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValue:
    def test_gamma_bar_with_exact_rational(self, capsys):
        code, out, _ = run_cli(capsys, "value", "4", "2", "gamma_bar")
        assert code == 0
        assert out.splitlines()[0] == "0.7258 (= 2268/3125)"

    def test_gamma_tilde_plain(self, capsys):
        code, out, _ = run_cli(capsys, "value", "1", "1", "gamma_tilde")
        assert code == 0
        assert out.splitlines()[0] == "3.2423"

    def test_inadmissible_warning_still_computes(self, capsys):
        code, out, _ = run_cli(capsys, "value", "1", "2", "gamma_tilde")
        assert code == 0
        assert out.splitlines()[0] == "2.1392 [inadmissible: no H-type group]"

    def test_error_bound_reported(self, capsys):
        _, out, _ = run_cli(capsys, "value", "2", "2", "weyl", "--precision", "9")
        assert "error_bound=" in out and "admissible=yes" in out

    def test_c_series_quantity(self, capsys):
        code, out, _ = run_cli(
            capsys, "value", "1", "1", "c_series", "--precision", "10", "--eps", "1e-12"
        )
        assert code == 0
        assert out.splitlines()[0] == "1.2337005501"  # pi^2/8

    def test_sobolev_quantity(self, capsys):
        code, out, _ = run_cli(capsys, "value", "1", "1", "sobolev", "--precision", "6")
        assert code == 0
        assert out.splitlines()[0] == "3.141593"

    def test_invalid_quantity_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["value", "1", "1", "nonsense"])
        assert err.value.code == 2

    def test_invalid_pair_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["value", "0", "1", "gamma_tilde"])
        assert err.value.code == 2

    def test_invalid_precision_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["value", "1", "1", "gamma_tilde", "--precision", "13"])
        assert err.value.code == 2


def _csv_cells(out: str) -> dict[tuple[int, int], list[str]]:
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,value,error_bound,admissible"
    cells = {}
    for line in lines[1:]:
        n, m, value, err, adm = line.split(",")
        cells[int(n), int(m)] = [value, err, adm]
    return cells


class TestTable:
    def test_gamma_tilde_matches_reference(self, capsys):
        code, out, _ = run_cli(capsys, "table", "gamma_tilde", "--format", "csv")
        assert code == 0
        cells = _csv_cells(out)
        want = reference.corrected(reference.GAMMA_TILDE_PRINTED, reference.GAMMA_TILDE_ERRATA)
        assert len(cells) == 100
        for key, printed in want.items():
            assert cells[key][0] == printed, key

    def test_gamma_bar_matches_reference(self, capsys):
        code, out, _ = run_cli(capsys, "table", "gamma_bar", "--format", "csv")
        assert code == 0
        cells = _csv_cells(out)
        want = reference.corrected(reference.GAMMA_BAR_PRINTED, reference.GAMMA_BAR_ERRATA)
        for key, printed in want.items():
            assert cells[key][0] == printed, key
            assert cells[key][1] == "0.000e+00"  # exact rational

    def test_csv_higher_precision_no_annotations(self, capsys):
        _, out, _ = run_cli(capsys, "table", "gamma_bar", "--format", "csv", "--precision", "8")
        cells = _csv_cells(out)
        assert cells[1, 3][0] == "1.58024691"
        assert cells[1, 3][2] == "false"
        assert cells[2, 2][2] == "true"
        assert not any(ch in out for ch in "*()")

    def test_markdown_annotations(self, capsys):
        _, out, _ = run_cli(capsys, "table", "gamma_tilde")
        assert "| **3.2423** |" in out  # admissible and > 1
        assert "(2.1392)" in out  # inadmissible
        assert "| 0.8662 |" in out  # admissible, below 1: bare
        _, plain, _ = run_cli(capsys, "table", "gamma_tilde", "--no-annotations")
        assert "**" not in plain and "(" not in plain.replace("(4 decimals", "")

    def test_markdown_red_flags_match_reference(self, capsys):
        _, out, _ = run_cli(capsys, "table", "gamma_bar")
        want = reference.corrected(reference.GAMMA_BAR_PRINTED, reference.GAMMA_BAR_ERRATA)
        for (n, m) in reference.RED_PRINTED_GAMMA_BAR:
            assert f"**{want[n, m]}**" in out

    def test_json_round_trip(self, capsys):
        _, out1, _ = run_cli(capsys, "table", "gamma_tilde", "--format", "json",
                             "--n-max", "4", "--m-max", "4")
        _, out2, _ = run_cli(capsys, "table", "gamma_tilde", "--format", "json",
                             "--n-max", "4", "--m-max", "4")
        assert out1 == out2  # byte-identical
        payload = json.loads(out1)
        assert payload["quantity"] == "gamma_tilde"
        assert len(payload["cells"]) == 16
        from pleijel.cli import _compute_cell

        for cell in payload["cells"]:
            fresh = _compute_cell("gamma_tilde", cell["n"], cell["m"], 4, 1e-8)
            assert cell["value"] == fresh.value  # exact float round trip
            assert cell["display"] == fresh.display
            assert cell["admissible"] == fresh.admissible

    def test_json_carries_exact_rationals_for_gamma_bar(self, capsys):
        _, out, _ = run_cli(capsys, "table", "gamma_bar", "--format", "json",
                            "--n-max", "2", "--m-max", "3")
        payload = json.loads(out)
        by_key = {(c["n"], c["m"]): c for c in payload["cells"]}
        assert by_key[2, 3]["exact"] == "15/16"

    def test_latex_format(self, capsys):
        _, out, _ = run_cli(capsys, "table", "gamma_bar", "--format", "latex",
                            "--n-max", "3", "--m-max", "3")
        assert out.startswith("%")
        assert "\\begin{tabular}" in out
        assert "\\cellcolor{gray!50}" in out  # inadmissible shading
        assert "\\textcolor{red}{4.0000}" in out  # admissible > 1

    def test_bounds_validated(self, capsys):
        for args in (["table", "gamma_tilde", "--n-max", "31"],
                     ["table", "gamma_tilde", "--precision", "0"],
                     ["table", "gamma_tilde", "--m-max", "0"]):
            with pytest.raises(SystemExit) as err:
                main(args)
            assert err.value.code == 2

    def test_determinism_markdown(self, capsys):
        _, a, _ = run_cli(capsys, "table", "gamma_tilde", "--n-max", "5", "--m-max", "5")
        _, b, _ = run_cli(capsys, "table", "gamma_tilde", "--n-max", "5", "--m-max", "5")
        assert a == b


class TestCheck:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "check", "admissibility", "--no-timestamp")
        assert code == 0
        assert out.splitlines()[0] == "PASS admissibility"
        report = json.loads(out.strip().splitlines()[-1])
        assert report["passed"] is True
        assert "timestamp" not in report

    def test_timestamp_present_by_default(self, capsys):
        _, out, _ = run_cli(capsys, "check", "admissibility")
        report = json.loads(out.strip().splitlines()[-1])
        assert "timestamp" in report

    def test_deterministic_with_no_timestamp(self, capsys):
        _, a, _ = run_cli(capsys, "check", "admissibility", "--no-timestamp")
        _, b, _ = run_cli(capsys, "check", "admissibility", "--no-timestamp")
        assert a == b

    def test_tables_suite_reports_errata(self, capsys):
        code, out, _ = run_cli(capsys, "check", "tables", "--no-timestamp")
        assert code == 0
        assert "erratum: gamma_bar(1,3)" in out
        assert "erratum: gamma_tilde(9,10)" in out

    def test_failure_exits_1(self, capsys, monkeypatch):
        # drop the gamma_bar erratum: the computed 1.5802 then mismatches
        # the printed 1.5803 and the tables suite must fail
        monkeypatch.setattr(reference, "GAMMA_BAR_ERRATA", {})
        code, out, _ = run_cli(capsys, "check", "tables", "--no-timestamp")
        assert code == 1
        assert "FAIL tables" in out
        assert "gamma_bar(1,3): computed 1.5802, reference 1.5803" in out

    def test_unknown_suite_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main(["check", "everything"])
        assert err.value.code == 2


class TestExceptional:
    def test_default_box(self, capsys):
        code, out, _ = run_cli(capsys, "exceptional")
        assert code == 0
        for pair in ("(1,1)", "(2,1)", "(2,2)", "(3,1)"):
            assert f"  {pair}  gamma_tilde in [" in out
        assert out.count("gamma_tilde in [") == 4
        assert "uncertain: none" in out

    def test_tiny_box(self, capsys):
        _, out, _ = run_cli(capsys, "exceptional", "--n-max", "1", "--m-max", "1")
        assert out.count("gamma_tilde in [") == 1
        assert "(1,1)" in out

    def test_intervals_printed_match_library(self, capsys):
        _, out, _ = run_cli(capsys, "exceptional", "--n-max", "1", "--m-max", "1")
        low, high = gamma_tilde_interval((1, 1), 1e-8)
        assert f"[{low:.8f}, {high:.8f}]" in out

    def test_determinism(self, capsys):
        _, a, _ = run_cli(capsys, "exceptional")
        _, b, _ = run_cli(capsys, "exceptional")
        assert a == b


class TestHType:
    def test_writes_heisenberg_matrix(self, capsys, tmp_path):
        out_file = tmp_path / "h.json"
        code, out, _ = run_cli(capsys, "htype", "1", "1", str(out_file))
        assert code == 0
        assert json.loads(out_file.read_text()) == {"n": 1, "m": 1, "U": [[[0, -1], [1, 0]]]}

    def test_quaternionic_family(self, capsys, tmp_path):
        out_file = tmp_path / "h23.json"
        code, _, _ = run_cli(capsys, "htype", "2", "3", str(out_file))
        assert code == 0
        data = json.loads(out_file.read_text())
        assert data["n"] == 2 and data["m"] == 3 and len(data["U"]) == 3

    def test_inadmissible_exits_3(self, capsys, tmp_path):
        out_file = tmp_path / "nope.json"
        code, _, err = run_cli(capsys, "htype", "2", "4", str(out_file))
        assert code == 3
        assert "rho(4) = 4" in err
        assert not out_file.exists()


class TestConsoleEntryPoint:
    def test_subprocess_invocation(self, tmp_path):
        # the installed entry point and module invocation agree
        result = subprocess.run(
            [sys.executable, "-m", "pleijel.cli", "value", "2", "3", "gamma_bar"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "0.9375 (= 15/16)"

    def test_subprocess_bad_args(self):
        result = subprocess.run(
            [sys.executable, "-m", "pleijel.cli", "table", "gamma_tilde", "--n-max", "99"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert result.returncode == 2
