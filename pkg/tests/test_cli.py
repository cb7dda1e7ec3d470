import json

import pytest

from vertexff.cli import main

FAST = ["--max-degree", "4", "--charge-window", "1", "--nu", "0.3", "--omega", "1@0.5"]


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_prop21_default_degree(capsys):
    code, out, _ = _run(capsys, "verify", "prop21", "--max-degree", "8", "--nu", "0.3", "--omega", "1@0.5")
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["cases"] >= 200
    assert rep["summary"]["failed"] == 0
    assert rep["params"]["max_degree"] == "8"


def test_report_schema(capsys):
    code, out, _ = _run(capsys, "verify", "prop21", *FAST)
    rep = json.loads(out)
    assert set(rep) == {"suite", "params", "cases", "summary"}
    assert set(rep["summary"]) == {"cases", "passed", "failed", "max_residual", "failed_ids"}
    assert rep["summary"]["passed"] == len(rep["cases"])


def test_deterministic_output(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "barnes", "--out", str(a)]) == 0
    assert main(["verify", "barnes", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_csv_format(capsys):
    code, out, _ = _run(capsys, "verify", "prop21", *FAST, "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("id,")
    assert len(lines) == 1 + 99


def test_failing_tolerance_exits_one(capsys):
    code, out, _ = _run(capsys, "verify", "barnes", "--tol", "1e-300")
    assert code == 1
    assert json.loads(out)["summary"]["failed"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nosuch"],
        ["verify", "barnes", "--tol", "0"],
        ["verify", "barnes", "--tol", "-1"],
        ["verify", "barnes", "--max-degree", "0"],
        ["verify", "barnes", "--nu", "a,b"],
        ["verify", "barnes", "--omega", "1@"],
        ["xxz", "--zeta", "0"],
        ["xxz", "--q", "-1"],
        ["frobnicate"],
        ["verify"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == 2


def test_unknown_config_key_exits_two(capsys, tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("bogus = 1\n")
    assert main(["verify", "barnes", "--config", str(path)]) == 2


def test_malformed_amplitudes_exit_two(capsys, tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("asym_amplitudes = 1.0, nope\n")
    assert main(["asymptotics", "--config", str(path)]) == 2


def test_xxz_free_fermion(capsys):
    code, out, _ = _run(capsys, "xxz", "--zeta", "1.5707963267948966", "--q", "1.0")
    rep = json.loads(out)
    assert code == 0
    assert abs(rep["summary"]["values"]["Z_q"] - 1) < 1e-10


def test_xxz_solver_failure_exits_one(capsys):
    code, _, err = _run(capsys, "xxz", "--zeta", "3.0", "--q", "4.0", "--grid", "16")
    assert code == 1
    assert "solver failure" in err


def test_asymptotics(capsys):
    code, out, _ = _run(capsys, "asymptotics", "--cutoff", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["harmonics"] == 3
    assert {tuple(r["kappas"]) for r in rep["cases"]} == {(-1, 1), (0, 0), (1, -1)}


def test_asymptotics_nonzero_spin(capsys, tmp_path):
    path = tmp_path / "spin.cfg"
    path.write_text("asym_o = 1, 0\n")
    with pytest.warns(UserWarning):
        code, out, err = _run(capsys, "asymptotics", "--config", str(path))
    assert code == 0
    assert json.loads(out)["cases"] == []
    assert "warning" in err
