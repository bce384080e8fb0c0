import csv
import io
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from cutoffqed import cli
from cutoffqed.cli import REPORT_COLUMNS, emit_csv, run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_compute_half(capsys):
    code, out, _ = invoke(capsys, "compute", "--spin", "half", "--p", "0", "--m", "1",
                          "--e2", "0.0072974", "--regulator", "delta:1000")
    assert code == cli.EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0].split(",") == REPORT_COLUMNS
    (r,) = rows(out)
    assert r["converged"] == "true"
    # leading log plus the constant found by the rest-frame oracle
    assert float(r["delta_m"]) == pytest.approx(0.0072974 * 3.4175805876925870, rel=1e-7)


def test_compute_zero_not_converged(capsys):
    code, out, _ = invoke(capsys, "compute", "--spin", "zero", "--regulator", "delta:10")
    assert code == cli.EXIT_NOT_CONVERGED
    assert rows(out)[0]["converged"] == "false"


def test_compute_mass_units(capsys):
    _, out1, _ = invoke(capsys, "compute", "--regulator", "delta:100")
    _, out2, _ = invoke(capsys, "compute", "--m", "2", "--regulator", "delta:100")
    assert float(rows(out2)[0]["delta_m"]) == pytest.approx(2 * float(rows(out1)[0]["delta_m"]), rel=1e-12)


def test_compute_uniform_spectrum(capsys):
    code, out, _ = invoke(capsys, "compute", "--regulator", "uniform:100,300")
    assert code == 0
    assert rows(out)[0]["lambda0_or_spec"] == "uniform:100,300"


@pytest.mark.parametrize("argv,needle", [
    (["compute", "--spin", "bogus"], "--spin"),
    (["compute", "--p", "abc"], "--p"),
    (["compute", "--m", "-1"], "m"),
    (["compute", "--regulator", "gauss:1"], "--regulator"),
    (["compute", "--regulator", "uniform:3,1"], "--regulator"),
    (["compute", "--rel-tol", "-1"], "tol"),
    (["sweep", "--lambda0", "1,x"], "--lambda0"),
    (["sweep", "--lambda0", "0,10"], "--lambda0"),
    (["sweep"], "--lambda0"),
    (["fock-check", "--nmax", "1"], "--nmax"),
    (["fock-check", "--scale", "0"], "--scale"),
    (["podolsky-check", "--a", "-2"], "--a"),
    (["integrand-dump", "--samples", "0"], "--samples"),
    (["frobnicate"], "frobnicate"),
    ([], "subcommand"),
])
def test_usage_errors(capsys, argv, needle):
    code, out, err = invoke(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert out == ""
    assert needle in err


def test_fock_check_passes(capsys):
    code, out, _ = invoke(capsys, "fock-check", "--nmax", "12", "--scale", "1")
    assert code == 0
    assert "FAIL" not in out
    assert "commutator_defect" in out


def test_podolsky_check_passes(capsys):
    code, out, _ = invoke(capsys, "podolsky-check", "--samples", "2000", "--seed", "4")
    assert code == 0
    assert out.count("PASS") == 4


def test_check_failure_exit(monkeypatch, capsys):
    monkeypatch.setattr(cli, "CHECK_TOL_FOCK", -1.0)
    code, out, _ = invoke(capsys, "fock-check")
    assert code == cli.EXIT_CHECK_FAILED
    assert "FAIL" in out


def test_sweep_rows_and_order(capsys):
    code, out, _ = invoke(capsys, "sweep", "--lambda0", "10,100", "--p-grid", "0,2")
    assert code == 0
    got = [(float(r["lambda0_or_spec"]), float(r["p"])) for r in rows(out)]
    assert got == [(10, 0), (10, 2), (100, 0), (100, 2)]


def test_sweep_deterministic(capsys):
    argv = ["sweep", "--lambda0", "100,1000", "--p-grid", "0,0.5"]
    _, a, _ = invoke(capsys, *argv)
    _, b, _ = invoke(capsys, *argv)
    assert a == b


def test_threads_cap(monkeypatch):
    monkeypatch.setenv("CUTOFFQED_THREADS", "1")
    assert cli._workers(10) == 1
    monkeypatch.setenv("CUTOFFQED_THREADS", "many")
    with pytest.raises(cli.UsageError):
        cli._workers(10)


def test_out_flag(tmp_path, capsys):
    path = tmp_path / "r.csv"
    code, out, _ = invoke(capsys, "compute", "--regulator", "delta:10", "--out", str(path))
    assert code == 0 and out == ""
    assert rows(path.read_text())[0]["spin"] == "half"


def test_integrand_dump(capsys):
    code, out, _ = invoke(capsys, "integrand-dump", "--samples", "5", "--regulator", "delta:2")
    assert code == 0
    data = rows(out)
    assert len(data) == 25
    assert {r["lambda"] for r in data} == {"2"}


def test_integrand_dump_zero_lambda(capsys):
    _, out, _ = invoke(capsys, "integrand-dump", "--samples", "3", "--regulator", "delta:0")
    assert all(float(r["value"]) == 0.0 for r in rows(out))


def test_emit_csv_header_only():
    assert emit_csv([], ["a", "b"]) == "a,b\n"


def test_emit_csv_one_row():
    text = emit_csv([{"a": 1.5, "b": True}], ["a", "b"])
    assert text.splitlines() == ["a,b", "1.5,true"]


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_round_trip(x):
    text = emit_csv([{"x": x}], ["x"])
    y = float(text.splitlines()[1])
    assert y == x and str(y) == str(x)


def test_console_entry_point():
    env = dict(os.environ, CUTOFFQED_THREADS="1")
    proc = subprocess.run([sys.executable, "-m", "cutoffqed", "compute", "--spin", "bogus"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 64
