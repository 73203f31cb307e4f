import json
import subprocess
import sys

import pytest

from conftest import data_path
from stripgaf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,line", [
    ("two_atom.json", "Quadratic (Thm1:atom)"),
    ("gaussian.json", "Linear (Thm2:condL2)"),
    ("inv_sqrt.json", "Undetermined (Remark:gap)"),
    ("singular.json", "Superlinear (Thm3:no-density)"),
])
def test_classify_golden(capsys, name, line):
    code, out, _ = run(capsys, "classify", "--measure", data_path(name))
    assert code == 0 and out.strip() == line


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "classify")[0] == 2
    assert run(capsys, "simulate", "--measure", data_path("gaussian.json"), "--reps", "x")[0] == 2


def test_config_errors(capsys, tmp_path):
    assert run(capsys, "classify", "--measure", str(tmp_path / "none.json"))[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert run(capsys, "classify", "--measure", str(bad))[0] == 3
    # no heights anywhere
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"density": {"builtin": "uniform"}}))
    code, _, err = run(capsys, "classify", "--measure", str(m))
    assert code == 3 and "--a" in err
    # simulate without windows
    assert run(capsys, "simulate", "--measure", data_path("gaussian.json"))[0] == 3
    # heights outside a finite strip
    m.write_text(json.dumps({"density": {"builtin": "gaussian"}, "delta": 0.3}))
    assert run(capsys, "classify", "--measure", str(m), "--a", "-0.1", "--b", "0.5")[0] == 3


def test_simulate_byte_identical(capsys, tmp_path):
    args = ["simulate", "--measure", data_path("gaussian.json"), "--T", "5", "--T", "10",
            "--reps", "12", "--modes", "256", "--seed", "9"]
    o1, o2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, *args, "--out", str(o1))[0] == 0
    assert run(capsys, *args, "--out", str(o2))[0] == 0
    assert o1.read_bytes() == o2.read_bytes()
    assert o1.read_text().startswith("T,mean,var,var_se,reps\n")
    code, out, _ = run(capsys, *args, "--format", "json")
    assert code == 0 and [r["T"] for r in json.loads(out)["rows"]] == [5.0, 10.0]


def test_analytic_outputs(capsys, tmp_path):
    code, _, err = run(capsys, "analytic", "--measure", data_path("gaussian.json"), "--kmax", "8",
                       "--out", str(tmp_path / "an"))
    assert code == 0 and "Linear" in err
    rep = json.loads((tmp_path / "an" / "regime.json").read_text())
    assert rep["regime"] == "Linear" and rep["k_truncation"] == 8 and rep["L1"] > 0
    rows = (tmp_path / "an" / "density_profile.csv").read_text().splitlines()
    assert rows[0] == "y,L" and len(rows) == 102
    assert all(abs(float(r.split(",")[1]) - 2.0) < 1e-8 for r in rows[1:])


def test_compare_exit_codes(capsys, tmp_path):
    base = ["compare", "--measure", data_path("two_atom.json"), "--T", "10", "--T", "20",
            "--T", "40", "--reps", "300"]
    code, out, _ = run(capsys, *base)
    assert code == 0 and "overall: PASS" in out
    code, out, _ = run(capsys, *base, "--tol", "0", "--out", str(tmp_path / "c.json"))
    assert code == 1 and "overall: FAIL" in out
    assert json.loads((tmp_path / "c.json").read_text())["passed"] is False


def test_selftest_subprocess():
    res = subprocess.run([sys.executable, "-m", "stripgaf.cli", "selftest"],
                         capture_output=True, text=True, timeout=300)
    assert res.returncode == 0, res.stdout + res.stderr
    assert "checks passed" in res.stdout and "FAIL" not in res.stdout
