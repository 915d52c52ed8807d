import json

import numpy as np
import pytest

from kdisc.cli import main

DISC_Z2 = json.dumps(
    {"numerators": [[[0, 0], [0, 0], [1, 0]]], "denominators": [[[1, 0]]]}
)
JET_11 = json.dumps({"p": [[0, 0]], "components": [[[1, 0]], [[1, 0]]]})


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_metric_command_and_byte_stability(capsys):
    args = ["metric", "--domain", "disc", "--jet", JET_11, "--tol", "1e-2"]
    code, out, _ = run(capsys, *args)
    assert code == 0
    payload = json.loads(out)
    ref = np.sqrt(1.0 + 0.5)
    assert abs(payload["value"] - ref) / ref < 0.05
    assert payload["config"]["bisect_tol"] == 1e-2
    code2, out2, _ = run(capsys, *args)
    assert code2 == 0 and out2 == out  # byte-identical rerun


def test_yu_command(capsys):
    code, out, _ = run(
        capsys,
        "yu",
        "--domain",
        "ball2",
        "--p",
        "[[0,0],[0,0]]",
        "--v",
        "[[0,0],[1,0]]",
        "--k",
        "2",
        "--tol",
        "1e-2",
    )
    assert code == 0
    val = json.loads(out)["value"]
    assert abs(val - 1.0 / np.sqrt(2.0)) < 0.02


def test_extremal_writes_profile_csv(tmp_path, capsys):
    target = tmp_path / "profile.csv"
    code, out, _ = run(
        capsys,
        "extremal",
        "--jet",
        JET_11,
        "--tol",
        "1e-2",
        "--csv",
        str(target),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["boundary_rho"]["max"] <= 0.0
    lines = target.read_text().strip().splitlines()
    assert lines[0] == "theta,rho"
    assert len(lines) == 513


def test_stationary_success_and_winding_failure(capsys):
    code, out, _ = run(
        capsys, "stationary", "--blaschke", "[[0.3,0],[-0.2,0.1]]", "--k", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certified"]
    assert payload["certificate"]["residual"] <= 1e-10
    code2, _, err = run(capsys, "stationary", "--disc", DISC_Z2, "--k", "1")
    assert code2 == 2
    detail = json.loads(err)
    assert detail["error"] == "NonzeroWinding" and detail["winding"] == -1


def test_blaschke_and_spectrum(tmp_path, capsys):
    code, out, _ = run(capsys, "blaschke", "--blaschke", "[[0.3,0],[-0.3,0]]")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 2
    assert abs(payload["value_at_zero"][0] - (-0.09)) < 1e-12
    target = tmp_path / "spec.csv"
    code2, out2, _ = run(
        capsys,
        "spectrum",
        "--disc",
        DISC_Z2,
        "--grid",
        "64",
        "--csv",
        str(target),
    )
    assert code2 == 0
    rows = json.loads(out2)["coefficients"]
    assert len(rows) == 1 and rows[0]["index"] == 2
    assert abs(rows[0]["c"][0][0] - 1.0) < 1e-14 and abs(rows[0]["c"][0][1]) < 1e-14
    assert target.exists()


def test_pairing_command(capsys):
    code, out, _ = run(capsys, "pairing", "--blaschke", "[[0.3,0]]", "--k", "1")
    assert code == 0
    table = json.loads(out)["pairing"]
    assert abs(table["1"]["S"] - 0.91) < 1e-12


def test_input_errors_exit_one(capsys):
    code, _, err = run(capsys, "metric", "--domain", "nosuch", "--jet", JET_11)
    assert code == 1
    assert json.loads(err)["error"] == "InputError"
    code2, _, err2 = run(capsys, "metric", "--domain", "disc", "--jet", "{broken")
    assert code2 == 1
    assert "jet" in json.loads(err2)["message"]
    code3, _, err3 = run(capsys, "stationary", "--k", "1")
    assert code3 == 1  # neither --disc nor --blaschke


def test_out_duplicates_stdout(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys, "blaschke", "--blaschke", "[[0.5,0]]", "--out", str(target)
    )
    assert code == 0
    assert target.read_text() == out


def test_verify_quick(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--domain",
        "disc",
        "--samples",
        "2",
        "--tol",
        "1e-2",
        "--seed",
        "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"]["pass"] is True
    assert payload["convexity"]["claim_contradicted"] is False
