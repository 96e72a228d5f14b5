import json
import subprocess
import sys

import pytest

from polycollatz.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_stop(capsys):
    assert run(["stop", "x^2+1"], capsys) == (0, "6\n", "")
    assert run(["stop", "0x5", "--method", "both"], capsys)[1] == "6\n"
    code, out, _ = run(["stop", "x^3+x^2", "--method", "direct", "--format", "json"], capsys)
    assert json.loads(out) == {"input": "0xc", "t_min": 5, "direct": 5}


def test_stop_zero_is_computation_error(capsys):
    code, out, err = run(["stop", "0"], capsys)
    assert code == 1 and out == ""
    assert "zero polynomial has no stopping time" in err


def test_usage_errors_exit_2_without_output(capsys):
    for argv in (
        ["stop", "x^2+x^2"],
        ["stop", "y"],
        ["family", "--a", "0", "--b", "0", "--n", "1"],
        ["family", "--a", "1", "--b", "0", "--n", "0"],
        ["ap-runs", "--a", "2", "--b", "1", "--d-min", "1", "--d-max", "3"],
        ["sweep", "--d-min", "3", "--d-max", "1"],
        ["sweep", "--d-min", "0", "--d-max", "99"],
        ["fp", "--p", "4", "x"],
        ["fp", "--p", "3"],
        ["fp", "--p", "3", "--sweep"],
        ["traj", "x", "--map", "Q"],
        ["bogus"],
        [],
    ):
        code, out, _ = run(argv, capsys)
        assert code == 2, argv
        assert out == "", argv


def test_traj(capsys):
    code, out, _ = run(["traj", "x^2+1", "--format", "json"], capsys)
    assert code == 0
    assert out == (
        '{"map":"T","input":"0x5","steps":["0x5","0xe","0x7","0x8","0x4","0x2","0x1"],'
        '"t_min":6,"truncated":false}\n'
    )
    code, out, _ = run(["traj", "x+1", "--map", "S3"], capsys)
    assert out.splitlines()[-1] == "# t_min = 1"
    code, out, _ = run(["traj", "x+1", "--map", "T1", "--budget", "3", "--format", "json"], capsys)
    assert json.loads(out)["truncated"] is True


def test_family(capsys):
    assert run(["family", "--a", "1", "--b", "0", "--n", "2"], capsys)[:2] == (0, "6\n")
    assert run(["family", "--a", "1", "--b", "0", "--n", "2", "--verify"], capsys)[:2] == (0, "6\n")
    code, out, _ = run(
        ["family", "--a", "2", "--b", "3", "--n", "7", "--verify", "--format", "json"], capsys
    )
    doc = json.loads(out)
    assert doc["verified"] and doc["t_min"] == 2**7 + (2 - 3) * 7


def test_ap_runs(capsys):
    code, out, _ = run(["ap-runs", "--a", "1", "--b", "0", "--d-min", "2", "--d-max", "3"], capsys)
    assert out.splitlines() == [
        "a,b,d,n_start,n_end,diff,first_value,length",
        "1,0,2,5,8,1,21,4",
        "1,0,3,9,16,1,41,8",
    ]
    code, out, _ = run(
        ["ap-runs", "--a", "1", "--b", "1", "--d-min", "2", "--d-max", "2", "--format", "json"],
        capsys,
    )
    assert json.loads(out) == [
        {"a": 1, "b": 1, "d": 2, "n_start": 3, "n_end": 4, "diff": 0, "first_value": 16, "length": 2}
    ]


def test_sweep(capsys, tmp_path):
    code, out, _ = run(["sweep", "--d-min", "0", "--d-max", "2"], capsys)
    assert out.splitlines()[1:] == [
        "0,1,0,0.000000,0x1,0.000000",
        "1,2,3,2.000000,0x3,0.828427",
        "2,4,6,4.000000,0x5,4.000000",
    ]
    code, out, _ = run(
        ["sweep", "--d-min", "0", "--d-max", "8", "--format", "json", "--cross-check"], capsys
    )
    assert code == 0 and len(json.loads(out)) == 9
    target = tmp_path / "s.csv"
    code, out, _ = run(
        ["sweep", "--d-min", "0", "--d-max", "10", "--threads", "2", "--out", str(target)], capsys
    )
    assert code == 0 and out == ""
    code, single, _ = run(["sweep", "--d-min", "0", "--d-max", "10"], capsys)
    assert target.read_text() == single
    code, out, _ = run(["sweep", "--d-min", "1", "--d-max", "4", "--growth"], capsys)
    assert json.loads(out)[1]["sigma_over_d"] == 3.0


def test_sweep_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("POLY_COLLATZ_CAP", "2")
    code, out, _ = run(["sweep", "--d-min", "0", "--d-max", "3"], capsys)
    assert code == 2 and out == ""


def test_fp(capsys):
    code, out, _ = run(["fp", "--p", "2", "x^2+1", "--format", "json"], capsys)
    doc = json.loads(out)
    assert doc["pre_period"] == 5 and doc["cycle_length"] == 2
    assert doc["cycle_entry"] == {"p": 2, "coeffs": [0, 1]}
    code, out, _ = run(["fp", "--p", "3", "2"], capsys)
    assert "pre_period\t0" in out
    code, out, _ = run(["fp", "--p", "5", "--sweep", "--d-max", "1", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc[1]["bound"] == 9 and doc[1]["count"] == 20


def test_check_quick(capsys):
    code, out, _ = run(["check", "--quick", "--seed", "3"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polycollatz", "stop", "x^2+1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
