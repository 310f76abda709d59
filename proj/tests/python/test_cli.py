import json
import os
import subprocess

import pytest

CLI = os.environ.get("QUARTIC_CLI", "quartic")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=120)


def records(out):
    return [json.loads(line) for line in out.splitlines() if line.startswith("{")]


def test_solve_emits_twisted_and_reduced_records():
    r = run("--output", "json", "solve", "--h", "16", "--gen", "340,680", "--multiples", "2")
    assert r.returncode == 0, r.stderr
    recs = records(r.stdout)
    reduced = [x for x in recs if x["h"] == "1"]
    assert [(x["A"], x["B"], x["C"], x["D"]) for x in reduced] == [("1203", "76", "653", "1176")]


def test_verify_exit_codes():
    ok = run("verify", "--h", "206", "--quad", "3923,1084,4747,506")
    assert ok.returncode == 0
    bad = run("verify", "--h", "206", "--quad", "3923,1084,4747,507")
    assert bad.returncode == 1
    invalid = run("verify", "--h", "1/0", "--quad", "1,1,1,1")
    assert invalid.returncode == 2


def test_off_curve_generator_reports_residual():
    r = run("solve", "--h", "16", "--gen", "340,681")
    assert r.returncode == 2
    assert "1361" in r.stderr


def test_resource_refusal():
    r = run("search", "--h", "3", "--bound", "200", "--pair-budget", "1000")
    assert r.returncode == 3


def test_method2_integerize():
    r = run("--output", "json", "method2", "--z", "5/3", "--gen", "2500/81,109000/729", "--integerize")
    assert r.returncode == 0, r.stderr
    quads = [x for x in records(r.stdout) if x.get("type") == "quadruple"]
    assert any((x["h"], x["A"], x["B"], x["C"], x["D"]) == ("108", "303", "158", "513", "88") for x in quads)


def test_search_and_records_round_trip(tmp_path):
    r = run("--output", "json", "search", "--h", "206", "--bound", "5000")
    assert r.returncode == 0, r.stderr
    hits = records(r.stdout)
    assert (hits[0]["A"], hits[0]["B"], hits[0]["C"], hits[0]["D"]) == ("4747", "506", "3923", "1084")
    path = tmp_path / "hits.jsonl"
    path.write_text(r.stdout)
    v = run("verify", "--records", str(path))
    assert v.returncode == 0, v.stdout + v.stderr
    tampered = r.stdout.replace('"506"', '"507"', 1)
    assert run("verify", "--records", "-", stdin=tampered).returncode == 1


@pytest.mark.parametrize("family", ["master", "ex4"])
def test_parametric_sweep(family):
    params = "1,1" if family == "master" else "1"
    r = run("--output", "json", "parametric", "--family", family, "--params", params)
    assert r.returncode == 0, r.stderr
    assert records(r.stdout)
