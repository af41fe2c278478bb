import io
import json
import subprocess
import sys

import pytest

from halfpow.cli import coeffset_to_record, main, record_to_coeffset, render_table
from halfpow.ramanujan_coeffs import coeffset


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_coeffs_plain():
    code, out = run("coeffs", "--k", "3")
    assert code == 0
    assert out.strip() == "P_3(n) = 2/5 n^2 + 1/2 n + 1/8 ; A_5 = 1/40"


def test_coeffs_json():
    code, out = run("coeffs", "--k", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"k": 1, "P": [[1, 2], [2, 3]], "A": {"3": [1, 6]}}


def test_coeffs_latex_ordering():
    _, out = run("coeffs", "--k", "7", "--format", "latex")
    body = out.split("=", 1)[1]
    marks = ["C_{7}", r"n^{\frac{9}{2}}", r"n^{\frac{7}{2}}", r"n^{\frac{5}{2}}", r"n^{\frac{1}{2}}", r"\tau(n,5)", r"\tau(n,9)"]
    pos = [body.index(m) for m in marks]
    assert pos == sorted(pos)
    assert r"- \frac{7}{384}n^{\frac{1}{2}}" in body
    assert r"+ \frac{1}{1152}\tau(n,9)" in body


def test_even_k_is_usage_error(capsys):
    code, _ = run("coeffs", "--k", "2")
    assert code == 2
    assert "odd" in capsys.readouterr().err


def test_table_rows():
    code, out = run("table", "--k", "9", "13", "1")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert rows == [
        "9 | 0, 1/256, 0, -1/512, 0, 1/5632",
        "13 | 0, -143/40960, 0, 221/122880, 0, -5/24576, 0, 1/122880",
        "1 | 0, 1/6",
    ]


def test_table_formats():
    latex = render_table([9], "latex")
    assert r"9 & $0$, $\frac{1}{256}$, $0$, $-\frac{1}{512}$, $0$, $\frac{1}{5632}$ \\" in latex
    rec = json.loads(render_table([1], "json"))
    assert rec == {"k": 1, "A": [[0, 1], [1, 6]]}


def test_constant(capsys):
    code, out = run("constant", "--k", "1", "--prec", "128")
    assert code == 0
    assert out.startswith("C_1 = -2.0788622497735456")
    assert "err <=" in out
    assert "within error bounds: yes" in out
    code, out = run("constant", "--k", "1", "--prec", "128", "--format", "json")
    rec = json.loads(out)
    assert rec["tau0_check"] is True and rec["C"]["precision_bits"] == 128
    assert float(rec["C"]["err"]) < 1e-30


def test_constant_missing_k():
    assert run("constant")[0] == 2


def test_verify_grid():
    code, out = run("verify", "--k", "5", "--n-max", "50", "--prec", "256", "--tol", "1e-30")
    assert code == 0 and out.startswith("PASS k=5 n=1..50: 50/50")


def test_verify_single_cell():
    assert run("verify", "--k", "1", "--n", "1")[0] == 0


def test_verify_json_is_ndjson_sorted():
    code, out = run("verify", "--k", "5", "3", "--n-max", "3", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [(r["k"], r["n"]) for r in recs] == [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3)]
    assert all(r["pass"] for r in recs)


def test_verify_unreachable_tolerance():
    assert run("verify", "--k", "1", "--n", "1", "--prec", "64", "--tol", "1e-999")[0] == 3


def test_verify_failure_exit_code():
    # 128 bits cannot reach 1e-60
    assert run("verify", "--k", "3", "--n", "2", "--prec", "128", "--tol", "1e-60")[0] in (1, 3)


def test_verify_needs_n():
    assert run("verify", "--k", "3")[0] == 2


def test_identities():
    code, out = run("identities", "--k-max", "31", "--samples", "100")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines)
    assert any("lemma4" in line and "31" in line for line in lines)


def test_identities_order_too_small():
    assert run("identities", "--order", "2")[0] == 2


def test_env_default_precision(monkeypatch):
    monkeypatch.setenv("HALFPOW_PREC", "100")
    _, out = run("constant", "--k", "3")
    assert "(100 bits)" in out


@pytest.mark.parametrize("k", [1, 3, 7, 13, 25])
def test_json_round_trip(k):
    cs = coeffset(k)
    text = json.dumps(coeffset_to_record(cs))
    assert record_to_coeffset(json.loads(text)) == cs


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "halfpow", "coeffs", "--k", "1"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.strip() == "P_1(n) = 2/3 n + 1/2 ; A_3 = 1/6"
