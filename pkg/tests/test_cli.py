"""CLI behaviour: exit codes, renderings, and report determinism."""
import json
import subprocess
import sys

import pytest

from qcliff.cli import main


def test_verify_ok_exit_zero(capsys):
    code = main(["verify", "--n", "3", "--suite", "frames"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] frames: frame_exponent_matrix_n3" in out


def test_verify_bound_violation_exit_one(capsys):
    code = main(["verify", "--n", "3", "--suite", "qmatrix", "--coeffs", "1,1,1,2"])
    out = capsys.readouterr().out
    assert code == 1
    assert "[FAIL]" in out


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--coeffs", "1,2"])
    assert err.value.code == 2


def test_unknown_suite_exit_two(capsys):
    code = main(["verify", "--suite", "bogus"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_expr_holds_and_fails(capsys):
    assert main(["expr", "b*c == c*b", "--n", "3"]) == 0
    assert "holds" in capsys.readouterr().out
    assert main(["expr", "a*b == b*a", "--n", "3"]) == 1
    assert "fails" in capsys.readouterr().out


def test_expr_syntax_error_exit_two(capsys):
    assert main(["expr", "a*(b", "--n", "3"]) == 2
    assert "offset 4" in capsys.readouterr().err


def test_gens_json_output(capsys):
    code = main(["gens", "--n", "2", "--json"])
    assert code == 0
    document = json.loads(capsys.readouterr().out)
    assert len(document["payload"]["generators"]) == 4


def test_su2_and_weyl_cells(capsys):
    assert main(["su2", "--two-j", "6", "--q", "1/2"]) == 0
    capsys.readouterr()
    assert main(["weyl", "--n", "4", "--json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["payload"]["diagonal_discrepancy"] == 1.5


def test_golden_report_byte_identical(tmp_path, capsys):
    first = tmp_path / "run1.json"
    second = tmp_path / "run2.json"
    argv = ["verify", "--n", "3", "--suite", "all", "--seed", "11", "--json"]
    assert main(argv + ["--out", str(first)]) == 0
    capsys.readouterr()
    assert main(argv + ["--out", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()
    assert json.loads(first.read_text())["ok"]


def test_golden_report_across_processes(tmp_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    base = [
        sys.executable,
        "-m",
        "qcliff.cli",
        "verify",
        "--n",
        "3",
        "--suite",
        "investigate",
        "--seed",
        "5",
        "--json",
    ]
    for path in (out_a, out_b):
        proc = subprocess.run(
            base + ["--out", str(path)], capture_output=True, text=True
        )
        assert proc.returncode == 0, proc.stderr
    assert out_a.read_bytes() == out_b.read_bytes()


def test_out_file_matches_stdout_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["weyl", "--n", "3", "--json", "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert out.read_text() == stdout
