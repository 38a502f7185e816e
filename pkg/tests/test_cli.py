import io
import json
import math
import shutil
import subprocess

import pytest

from mfq.cli import main

LN_1_SQRT2 = 0.88137358701954302
E_INV2 = 0.13533528323661270


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() and "--output" not in argv else text)


def test_classify_examples():
    code, out = run("classify", "(0+1I) + 1.41421356237k")
    assert code == 0
    assert out["class"] == "purely-loxodromic"
    assert out["half_trace_length"] == pytest.approx(LN_1_SQRT2, abs=1e-9)
    assert out["measured_displacement"] == pytest.approx(2 * LN_1_SQRT2, abs=1e-9)
    assert out["half_trace_angle"] == pytest.approx(math.pi / 2, abs=1e-9)
    assert out["rotation_angle"] == pytest.approx(math.pi, abs=1e-9)
    assert out["axis"]["basepoint"]["w"] == [1, 0]

    code, out = run("classify", "1")
    assert code == 0 and out["class"] == "identity" and out["axis"] is None

    code, out = run("classify", "1.5430806+1.1752012i")
    assert code == 0 and out["class"] == "hyperbolic" and out["normalized"] is True
    assert out["half_trace_length"] == pytest.approx(1.0, abs=1e-6)


def test_classify_refuses_non_normalizable():
    code, out = run("classify", "2i")
    assert code == 2 and "normalize" in out["error"]
    code, out = run("classify", "(1+1I)")
    assert code == 2


def test_act_examples():
    code, out = run("act", "1", "1")
    assert code == 0
    assert out["hyperboloid"]["text"] == "1"
    assert out["ball"] == [0, 0, 0]
    assert out["uhs"][2] == 1 and out["uhs"][0] == 0
    code, out = run("act", "k", "1")
    assert out["hyperboloid"]["text"] == "1"
    code, out = run("act", "1.5430806+1.1752012i", "1")
    assert out["uhs"][2] == pytest.approx(E_INV2, abs=1e-7)
    code, out = run("act", "1", "2")
    assert code == 2


def test_exact_mode():
    code, out = run("act", "k", "1", "--mode", "exact")
    assert code == 0 and out["hyperboloid"]["w"] == ["1", "0"]
    code, out = run("classify", "k", "--mode", "exact", "--algebra", "2,3,5")
    assert code == 2  # norm of ij is -ab
    code, out = run("classify", "1", "--mode", "exact", "--algebra", "2,3,5")
    assert code == 0 and out["class"] == "identity" and "axis" not in out
    code, out = run("classify", "1", "--algebra", "2,3,5")
    assert code == 2


def test_convert_distance_decompose():
    code, out = run("convert", "hyperboloid", "uhs", "1", "0", "0", "0")
    assert code == 0 and out["coords"][2] == 1 and out["coords"][0] == 0
    code, out = run("convert", "uhs", "ball", "0,0,1")
    assert out["coords"] == [0, 0, 0]
    code, out = run("convert", "ball", "hyperboloid", "0.5", "0", "0")
    assert out["coords"][0] == pytest.approx(5 / 3)
    code, out = run("convert", "ball", "uhs", "1", "0", "0")
    assert code == 2
    code, out = run("distance", "1", "1.5430806348152437 + 1.1752011936438014 i")
    assert out["distance"] == pytest.approx(1.0, abs=1e-15)
    code, out = run("decompose", "(0.8+0.1I) + 0.3i + (0.2-0.4I) j + 0.5k")
    assert code == 0 and out["reconstruction_residual"] <= 1e-15
    code, out = run("decompose", "k", "--mode", "exact")
    assert out["exact_identity"] is True and out["mu_w"]["text"] == "1"


def test_verify():
    code, out = run("verify", "equivariance", "--n", "500", "--seed", "42")
    assert code == 0 and out["passed"] and out["max_residual"] <= 1e-9
    code, out = run("verify", "homomorphism", "--n", "20", "--mode", "exact")
    assert code == 0
    code, out = run("verify", "nope")
    assert code == 2
    code, out = run("verify", "axes", "--mode", "exact")
    assert code == 2
    # an absurd tolerance makes the suite fail with exit status 1
    code, out = run("verify", "closure", "--n", "50", "--tol", "1e-300")
    assert code == 1 and not out["passed"]


def test_deterministic_output():
    a = run("verify", "axes", "--n", "30", "--seed", "7")
    b = run("verify", "axes", "--n", "30", "--seed", "7")
    assert a == b


def test_json_digits():
    out = io.StringIO()
    main(["convert", "ball", "hyperboloid", "0.1", "0.2", "0.3"], stdout=out)
    for token in out.getvalue().split("[")[1].split("]")[0].split(","):
        # shortest text that reads back to the same double
        assert token.strip() == repr(float(token))
    assert run("decompose", "1.2 + 0.3 j")[1]["m"]["y"] == [0.3, 0.0]


def test_verify_custom_algebra():
    code, out = run("verify", "generalized", "--n", "5", "--algebra", "2,3,5")
    assert code == 0 and out["passed"]
    assert out["info"]["algebras"] == [["2", "3", "5"]]


def test_usage_errors():
    assert run("frobnicate")[0] == 2
    assert run("classify")[0] == 2
    assert run("classify", "1", "--tol", "-1")[0] == 2
    assert run("classify", "1", "--algebra", "1,1")[0] == 2
    assert run("verify", "closure", "--n", "0")[0] == 2


def test_plain_output():
    out = io.StringIO()
    assert main(["classify", "1", "--output", "plain"], stdout=out) == 0
    assert "class: identity" in out.getvalue().splitlines()


def test_batch(monkeypatch):
    lines = "classify 1\n\n# comment\nact k 1\nclassify '1 +'\nbatch\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(lines))
    out = io.StringIO()
    code = main(["batch"], stdout=out)
    records = [json.loads(line) for line in out.getvalue().splitlines()]
    assert [r["exit"] for r in records] == [0, 0, 2, 2]
    assert records[0]["result"]["class"] == "identity"
    assert "byte 3" in records[2]["result"]["error"]
    assert code == 2


@pytest.mark.skipif(shutil.which("mfq") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["mfq", "classify", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["class"] == "identity"
    proc = subprocess.run(["mfq", "verify", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2 and "unknown suite" in proc.stderr
