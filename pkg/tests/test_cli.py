"""CLI surface: output formats and exit codes."""

import json
import subprocess
import sys

import pytest

from congrkit.cli import main


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "congrkit.cli", *argv],
        capture_output=True, text=True, timeout=300,
    )
    return proc


def test_compute_sum_prints_residue(capsys):
    assert main(["compute", "sum", "--a", "4", "--b", "2", "--num", "-1",
                 "--den", "1", "--prime", "7"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_compute_symbol_jacobi(capsys):
    assert main(["compute", "symbol", "--kind", "jacobi", "--top", "2",
                 "--bottom", "7"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_compute_symbol_cubic(capsys):
    assert main(["compute", "symbol", "--kind", "cubic", "--top", "1,2",
                 "--bottom", "23"]) == 0
    assert capsys.readouterr().out.strip() == "w^0"


def test_compute_symbol_quartic(capsys):
    assert main(["compute", "symbol", "--kind", "quartic", "--top", "2,1",
                 "--bottom", "13"]) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("i^") and out[2:] in "0123"


def test_compute_tsum(capsys):
    assert main(["compute", "tsum", "--n", "4", "--m", "3", "--r", "0"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_compute_lucas(capsys):
    assert main(["compute", "lucas", "--P", "1", "--Q", "-1", "--n", "10",
                 "--prime", "101"]) == 0
    assert capsys.readouterr().out.strip() == "U=55 V=22"


def test_represent(capsys):
    assert main(["represent", "--form", "1,0,15", "--prime", "31"]) == 0
    assert capsys.readouterr().out.strip() == "(-4,-1) (-4,1) (4,-1) (4,1)"


def test_classgroup(capsys):
    assert main(["classgroup", "--disc", "-3"]) == 0
    assert capsys.readouterr().out.strip() == "[1,1,1]"
    assert main(["classgroup", "--disc", "-207"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 6 and lines[0] == "[1,1,52]"


def test_primes(capsys):
    assert main(["primes", "--limit", "13"]) == 0
    assert capsys.readouterr().out.split() == ["2", "3", "5", "7", "11", "13"]


def test_verify_text_and_exit_zero(capsys):
    assert main(["verify", "--id", "thm-2.6", "--max-prime", "200"]) == 0
    out = capsys.readouterr().out
    assert "thm-2.6" in out and "failed=0" in out


def test_verify_unknown_id_exits_2(capsys):
    assert main(["verify", "--id", "no-such-id", "--max-prime", "100"]) == 2
    assert "no-such-id" in capsys.readouterr().err


def test_verify_requires_id_or_all(capsys):
    assert main(["verify", "--max-prime", "100"]) == 2


def test_verify_disputed_exit_behavior(capsys):
    assert main(["verify", "--id", "thm-4.4", "--max-prime", "60"]) == 0
    capsys.readouterr()
    assert main(["verify", "--id", "thm-4.4", "--max-prime", "60",
                 "--strict"]) == 1


def test_verify_json_parses(capsys):
    assert main(["verify", "--id", "thm-4.4", "--id", "thm-2.6",
                 "--max-prime", "100", "--format", "json"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert {r["id"] for r in reports} == {"thm-4.4", "thm-2.6"}
    disputed = next(r for r in reports if r["id"] == "thm-4.4")
    assert disputed["failures"][0]["prime"] == 11
    assert disputed["failures"][0]["lhs"] == 0


def test_compute_sum_bad_prime_errors(capsys):
    assert main(["compute", "sum", "--a", "4", "--b", "2", "--num", "1",
                 "--prime", "15"]) == 2
    assert "not an odd prime" in capsys.readouterr().err


def test_cli_as_subprocess_matches_in_process():
    proc = run_cli("compute", "tsum", "--n", "4", "--m", "3", "--r", "0")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "5"


def test_usage_error_exit_code():
    proc = run_cli("compute", "sum", "--a", "4")
    assert proc.returncode == 2
