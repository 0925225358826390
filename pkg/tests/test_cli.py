import io
import json
import subprocess
import sys

import pytest

from sympow.cli.main import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_poly_r0():
    assert run("poly", "--family", "r", "--k", "0") == (0, "2\n", "")


def test_poly_methods_agree():
    a = run("poly", "--family", "delta", "--k", "7", "--d", "4")
    b = run("poly", "--family", "delta", "--k", "7", "--d", "4", "--method", "closed")
    assert a == b and a[0] == 0
    assert run("poly", "--family", "nu", "--k", "2")[1] == "a^4 + m^2 + y\n"


def test_mul():
    code, out, _ = run("mul", "--space", "sp2n", "--n", "3", "--field", "C", "--coeff", "Z", "g^3*h/2", "1")
    assert (code, out) == (0, "3*(g*h^2/4)\n")
    assert run("mul", "--space", "sp2n", "--n", "3", "g^4")[1] == "4*(g^2*h/2) - h^2/2\n"
    assert run("mul", "--space", "mp", "--coeff", "F2", "t", "t")[1] == "m*t\n"


def test_ring_table():
    code, out, _ = run("ring", "--space", "sp2", "--field", "H", "--coeff", "Z", "--deg-from", "0", "--deg-to", "24")
    assert code == 0
    assert "generators: g (4), h (8)" in out
    line16 = next(l for l in out.splitlines() if l.split()[:1] == ["16"])
    assert line16.split(None, 1)[1].strip() == "g^4, g^2*h/2, h^2/2"


def test_basis_json():
    code, out, _ = run("basis", "--space", "sp2n", "--n", "2", "--coeff", "F2", "--format", "json",
                       "--deg-from", "8", "--deg-to", "8")
    assert code == 0
    assert json.loads(out)["degrees"] == [{"degree": 8, "free": ["a^6*t=m^3*t"], "torsion2": []}]


def test_poincare():
    code, out, _ = run("poincare", "--space", "boreln", "--n", "1", "--format", "csv", "--deg-to", "4")
    assert code == 0
    assert out.splitlines()[:4] == ["degree,free,torsion2", "0,1,0", "1,0,0", "2,1,1"]


@pytest.mark.parametrize("argv", [
    ["mul", "--space", "sp2", "h/2"],
    ["mul", "--space", "sp2", "g +"],
    ["mul", "--space", "sp2", "q"],
    ["ring", "--space", "boreln", "--n", "2", "--coeff", "F2"],
    ["ring", "--space", "nowhere"],
    ["ring", "--space", "sp2n"],
    ["ring", "--space", "sp2", "--deg-from", "5", "--deg-to", "2"],
    ["mul", "--space", "thn", "--n", "2", "1"],
    ["poly", "--family", "r", "--k", "0", "--method", "closed"],
])
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err


@pytest.mark.parametrize("argv", [["ring"], ["frobnicate"], ["ring", "--space", "sp2", "--n", "x"],
                                  ["verify", "--suite", "nope"]])
def test_argparse_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_verify_pass_and_fail(monkeypatch):
    code, out, _ = run("verify", "--suite", "closedforms")
    assert code == 0 and out.rstrip().endswith("ALL PASS")
    from sympow import suites
    from sympow.verdict import Verdict

    monkeypatch.setitem(suites.SUITES, "closedforms", lambda top: [Verdict(False, "forced", "x")])
    code, out, _ = run("verify", "--suite", "closedforms", "--format", "json")
    assert code == 1 and json.loads(out)["ok"] is False


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sympow", "poly", "--family", "r", "--k", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "e1^3 - 3*e1*e2\n"
