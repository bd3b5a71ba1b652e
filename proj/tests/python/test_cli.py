import json
import os
import subprocess

import pytest

CLI = os.environ.get("TORUS_MIRROR_CLI", "torus-mirror")

EXAMPLE = {"T": [[[0, 1], 1], [-1, [0, 1]]]}


def run(*args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.pop("TORUS_MIRROR_TOL", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, env=full_env)


def test_find_delta_json_to_stdout():
    proc = run("find-delta", json.dumps(EXAMPLE), "--json", "-")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["schema"] == "torus-mirror.report/v1"
    assert report["result"]["delta"] == [[0, 0], [0, 1]]
    assert report["result"]["det_T_minus_delta"] == [0, -1]
    assert report["pass"] is True


def test_input_from_stdin():
    proc = run("mirror", "-", "--json", "-", stdin=json.dumps(EXAMPLE))
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["Tprime"] == [[[1, 1], [0, 1]], [[0, -1], [1, 0]]]


def test_malformed_input_exits_2_with_path():
    bad = {"T": [[[0, 1], 1], [-1, [0, "x"]]]}
    proc = run("find-delta", json.dumps(bad))
    assert proc.returncode == 2
    assert "/T/1/1/1" in proc.stderr
    assert run("find-delta", "{not json").returncode == 2
    assert run("find-delta", "/nonexistent/file.json").returncode == 2


def test_non_positive_im_t_exits_2():
    proc = run("find-delta", json.dumps({"T": [[[0, -1]]]}))
    assert proc.returncode == 2


def test_unknown_suite_and_bad_flags_exit_2():
    assert run("verify", "bogus").returncode == 2
    assert run("verify", "sets", "--tol", "0").returncode == 2
    assert run("enumerate", "--bound", "3").returncode == 2
    assert run("verify", "sets", "--exact", "--float").returncode == 2
    assert run("verify", "sets", env={"TORUS_MIRROR_TOL": "abc"}).returncode == 2


def test_verification_failure_exits_1():
    proc = run("verify", "automorphy", "--json", "-", env={"TORUS_MIRROR_TOL": "1e-300"})
    assert proc.returncode == 1
    report = json.loads(proc.stdout)
    assert report["config"]["tol"] == pytest.approx(1e-300)
    assert report["pass"] is False


def test_non_holomorphic_bundle_reports_failure():
    doc = dict(EXAMPLE, r=1, A=[[1, 1], [1, -1]])
    proc = run("check-bundle", json.dumps(doc), "--json", "-")
    assert proc.returncode == 1
    checks = {c["name"]: c["status"] for c in json.loads(proc.stdout)["checks"]}
    assert checks["bundle.holomorphic"] == "fail"
    assert checks["bundle.condition_split"] == "pass"


def test_holomorphic_bundle_and_unitaries():
    doc = dict(EXAMPLE, r=2, A=[[0, 1], [1, 1]], p=["1/2", 0], q=[0, "1/3"])
    proc = run("check-bundle", json.dumps(doc), "--json", "-")
    assert proc.returncode == 0, proc.stdout
    result = json.loads(proc.stdout)["result"]
    assert result["rank"]["rprime"] == 4
    proc = run("build-unitaries", json.dumps({"r": 2, "A": [[0, 1], [1, 1]], "delta": [[0, 0], [0, 1]]}))
    assert proc.returncode == 0


def test_enumerate_default_example(tmp_path):
    out = tmp_path / "report.json"
    proc = run("enumerate", "--bound", "1", "--json", str(out))
    assert proc.returncode == 0
    report = json.loads(out.read_text())
    assert [[0, 1], [1, 1]] in report["result"]["delta_only"]
    assert [[1, 1], [1, -1]] in report["result"]["syz_only"]


def test_reports_are_deterministic_without_timing():
    a = run("verify", "pairings", "--seed", "3", "--json", "-").stdout
    b = run("verify", "pairings", "--seed", "3", "--json", "-").stdout
    assert a == b
    timed = json.loads(run("verify", "sets", "--timing", "--json", "-").stdout)
    assert "wall_time_seconds" in timed


def test_float_mode_accepts_doubles():
    doc = {"T": [[[0.0, 1.0], 1.0], [-1.0, [0.0, 1.0]]]}
    assert run("find-delta", json.dumps(doc), "--float").returncode == 0
    assert run("find-delta", json.dumps({"T": [[[0.5, 1.0]]]})).returncode == 2
