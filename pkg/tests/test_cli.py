"""CLI behaviour: verbs, exit codes, deterministic JSON reports."""

import json
import subprocess
import sys

import pytest

from heckekoszul.cli import main, run_suite


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "heckekoszul", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_eval_verb():
    code, out, _ = run_cli("eval", "--type", "A1", "T[s1]*T[s1]")
    assert code == 0
    assert out.strip() == "1 + T[s1]*(v - v^-1)"


def test_apply_verb():
    code, out, _ = run_cli("apply", "--type", "A1", "--inv", "kim", "T[s1]")
    assert code == 0
    assert out.strip() == "(-v + v^-1) + T[s1]"


def test_verify_exit_codes():
    code, _, _ = run_cli("verify", "--type", "A2", "--suite", "theorem")
    assert code == 0
    code, _, err = run_cli("verify", "--type", "A2", "--suite", "nonsense")
    assert code == 2
    code, _, err = run_cli("eval", "--type", "Q9", "v")
    assert code == 2
    assert "error" in err


def test_koszul_verb():
    code, out, _ = run_cli("koszul", "check-diagonal", "--dimV", "1", "--dimF", "1")
    assert code == 0
    assert "PASS" in out


def test_kclass_verbs():
    code, out, _ = run_cli("kclass", "expand", "--type", "A1", "--atom", "W(1)")
    assert code == 0
    assert out.strip() == "v^2 + T[s1]*(-v)"
    code, out, _ = run_cli("kclass", "kim", "--type", "A1", "--atom", "Y(1;B)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["side"] == "CZ"


def test_json_reports_are_byte_identical():
    first = json.dumps(run_suite("relations", "A2", 10, seed=5), sort_keys=True)
    second = json.dumps(run_suite("relations", "A2", 10, seed=5), sort_keys=True)
    assert first == second
    third = json.dumps(run_suite("involution", "A1", 8, seed=9), sort_keys=True)
    fourth = json.dumps(run_suite("involution", "A1", 8, seed=9), sort_keys=True)
    assert third == fourth


@pytest.mark.parametrize("suite", ["relations", "involution", "theorem", "kclass"])
def test_run_suite_passes(suite):
    report = run_suite(suite, "A2", 12, seed=3)
    assert report["passed"], report


def test_run_suite_koszul_small():
    report = run_suite("koszul", cutoff=4, n_samples=10, seed=1)
    assert report["passed"]


def test_main_in_process():
    assert main(["verify", "--type", "A1", "--suite", "theorem"]) == 0
    assert main(["eval", "--type", "A1", "th[1"]) == 2
