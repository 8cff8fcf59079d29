import io
import json
import math
import subprocess
import sys

import pytest

from orthokit.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_quad_json():
    code, out, _ = call("quad", "--family", "legendre", "--n", "2", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["u0"] == 2
    assert [round(x, 12) for x in obj["nodes"]] == [round(-1 / math.sqrt(3), 12), round(1 / math.sqrt(3), 12)]
    assert all(abs(w - 1) < 1e-14 for w in obj["weights"])
    assert "0.57735026918962" in out  # 17 significant digits are written


def test_identity_exact():
    code, out, _ = call("identity", "--name", "chu-vandermonde", "--params", "n=2,a=1,c=3", "--exact")
    assert code == EXIT_OK
    assert "lhs: 1/2" in out and "rhs: 1/2" in out and "residual: 0" in out


def test_eval_p0():
    code, out, _ = call("eval", "--family", "hermite", "--n", "0", "--x", "3.14")
    assert code == EXIT_OK and out.strip() == "1"


def test_eval_standard_normalization():
    code, out, _ = call("eval", "--family", "laguerre", "--n", "1", "--x", "1/3", "--normalization", "standard")
    assert out.strip() == "2/3"


def test_rule_file_roundtrip(tmp_path):
    path = tmp_path / "rule.json"
    _, out, _ = call("quad", "--family", "laguerre", "--params", "alpha=1/2", "--n", "5", "--format", "json")
    path.write_text(out)
    _, a, _ = call("quad", "--rule-file", str(path), "--integrate", "0,0,0,1")
    _, b, _ = call("quad", "--family", "laguerre", "--params", "alpha=1/2", "--n", "5", "--integrate", "0,0,0,1")
    assert a == b
    assert abs(float(a) - math.gamma(4.5)) < 1e-12
    csv_path = tmp_path / "rule.csv"
    _, out, _ = call("quad", "--family", "hermite", "--n", "4", "--format", "csv")
    csv_path.write_text(out)
    code, val, _ = call("quad", "--rule-file", str(csv_path), "--integrate", "0,0,1")
    assert code == 0 and abs(float(val) - math.sqrt(math.pi) / 2) < 1e-14


def test_recurrence_and_moments(tmp_path):
    code, out, _ = call("recurrence", "--family", "legendre", "--n", "3", "--format", "json")
    obj = json.loads(out)
    assert obj["gamma"][:2] == ["1/3", "4/15"]
    rpath = tmp_path / "rc.json"
    rpath.write_text(out)
    code, out, _ = call("moments", "--recurrence-file", str(rpath), "--n", "4", "--exact", "--format", "json")
    assert code == 0 and json.loads(out)["moments"] == [2, 0, "2/3", 0, "2/5"]
    mpath = tmp_path / "m.json"
    mpath.write_text(out)
    code, out, _ = call("recurrence", "--moments-file", str(mpath), "--n", "1")
    assert code == 0 and "1/3" in out


def test_classify():
    code, out, _ = call("classify", "--pair", "c=2,p=-4,q=4", "--format", "json")
    assert json.loads(out) == {"family": "hermite", "params": {}, "A": 1, "B": 1, "K": "1/2", "verified": True}


def test_hyp_and_markov():
    code, out, _ = call("hyp", "--a=1,1", "--b", "2", "--x", "1/2")
    assert abs(float(out) - 2 * math.log(2)) < 1e-15
    code, out, _ = call("markov", "--family", "chebyshev-u", "--normalize", "--n", "40", "--z", "2")
    assert abs(float(out) - 2 * (2 - math.sqrt(3))) < 1e-10


def test_invert_and_bessel_circle():
    code, out, _ = call("invert", "--transform", "chebyshev-u", "--a=-1/2", "--b", "1/2", "--format", "json")
    assert abs(json.loads(out)["extrapolated"] - 0.60900) < 2e-3
    code, out, _ = call("bessel-circle", "--m", "1", "--n", "1", "--format", "json")
    obj = json.loads(out)
    assert abs(obj["closed_form"]["re"] - 2 / 3) < 1e-15


def test_domain_error_exit_code():
    code, out, err = call("recurrence", "--family", "meixner", "--params", "beta=1,c=1/2", "--n", "3")
    assert code == EXIT_DOMAIN and out == ""
    obj = json.loads(err)
    assert obj["error"] == "UnsupportedFamily"
    code, _, err = call("quad", "--family", "bessel", "--n", "3")
    assert code == EXIT_DOMAIN and json.loads(err)["error"] == "NotPositiveDefinite"
    code, _, err = call("identity", "--name", "gauss", "--params", "a=1,b=1,c=3/2")
    assert code == EXIT_DOMAIN and json.loads(err)["error"] == "ConstraintViolated"


@pytest.mark.parametrize("argv", [
    ("quad", "--n", "3"),
    ("quad", "--family", "hermite", "--rule-file", "x.json", "--n", "2"),
    ("eval", "--family", "hermite", "--n", "2"),
    ("nosuch",),
    ("quad", "--family", "legendre", "--n", "2", "--params", "oops"),
    ("quad", "--family", "legendre", "--n", "2", "--format", "xml"),
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == EXIT_USAGE and out == ""
    assert json.loads(err)["error"] == "UsageError"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orthokit", "eval", "--family", "hermite", "--n", "2", "--x", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/2"
    proc = subprocess.run([sys.executable, "-m", "orthokit"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
