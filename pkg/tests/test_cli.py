import io
import json

import pytest

from symbidisc import cli


def run(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), stdout=buf)
    return code, [json.loads(line) for line in buf.getvalue().splitlines()]


def test_membership_classes():
    code, [rec] = run("membership", "0", "0.25")
    assert code == 0 and rec["class"] == "Interior" and rec["pass"] is True
    code, [rec] = run("membership", "2", "1")
    assert code == 1 and rec["class"] == "Boundary"
    code, [rec] = run("membership", "3", "0")
    assert rec["class"] == "Outside"


def test_usage_errors():
    assert run("membership", "x", "0")[0] == 2
    assert run("orbit", "3", "1")[0] == 2
    assert run("synchrony", "--alpha", "0.2", "--eta", "2")[0] == 2
    assert run("geodesic", "--beta", "1.5")[0] == 2
    assert run("lambda", "--instance", "linear", "--matrix", "1,2")[0] == 2
    assert run()[0] == 2


def test_complex_parsing_and_encoding():
    code, [rec] = run("sharp", "0", "0.3")
    assert code == 0
    assert rec["input"]["s"] == [{"re": 0.0, "im": 0.0}, {"re": 0.3, "im": 0.0}]
    assert abs(rec["sharp"][1]["re"]) < 1e-12
    assert cli.parse_complex("1-2i") == 1 - 2j


def test_geodesic():
    code, [rec] = run("geodesic", "--beta", "0.5", "--samples", "4")
    assert code == 0 and len(rec["points"]) == 4
    assert abs(rec["z0"]["re"] - (7 - 4 * 3 ** 0.5)) < 1e-12


def test_synchrony_and_orbit():
    code, [rec] = run("synchrony", "--alpha", "0.2+0.1i", "--eta", "1i")
    assert code == 0 and rec["pass"]
    code, [rec] = run("orbit", "0", "0.3", "--grid", "2")
    assert rec["stabilizer_order"] == 2 and len(rec["samples"]) == 8
    code, [rec] = run("orbit", "0", "0")
    assert rec["stabilizer_order"] == "inf"


def test_lambda_and_pde():
    assert run("lambda", "--instance", "triangular", "--samples", "10")[0] == 0
    assert run("pde-check", "--builtin", "gamma")[0] == 0
    code, [rec] = run("pde-check", "--builtin", "perturbed")
    assert code == 1 and rec["residuals"]["z_equation"] >= 0.04


def test_symmetry_cmd():
    code, [rec] = run("symmetry", "--domain", "annulus", "--q", "0.5", "--z", "1i")
    assert rec["symmetry_point"] is True
    code, [rec] = run("symmetry", "--domain", "tetrablock", "--p-grid", "0.3,0.6")
    assert code == 0 and rec["symmetry_points"] == 0
    assert run("symmetry", "--domain", "annulus", "--z", "5")[0] == 2


def test_verify_deterministic():
    a = run("--seed", "3", "verify", "--suite", "bidisc")
    b = run("--seed", "3", "verify", "--suite", "bidisc")
    assert a == b and a[0] == 0


def test_text_and_env(monkeypatch):
    buf = io.StringIO()
    assert cli.run(["--text", "membership", "0", "0"], stdout=buf) == 0
    assert buf.getvalue().startswith("[membership] pass=True")
    monkeypatch.setenv("SYMBIDISC_SEED", "7")
    assert cli.build_parser().parse_args(["membership", "0", "0"]).seed == 7


def test_main_exits(monkeypatch, capsys):
    monkeypatch.setattr("sys.argv", ["symbidisc", "membership", "0", "0"])
    with pytest.raises(SystemExit) as exc:
        cli.main()
    assert exc.value.code == 0
