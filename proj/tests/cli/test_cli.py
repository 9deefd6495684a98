"""Black-box tests of the gitstab executable."""
import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
BIN = os.environ.get("GITSTAB_BIN", str(ROOT / "build" / "gitstab"))
GOLDEN = pathlib.Path(os.environ.get("GITSTAB_GOLDEN", ROOT / "tests" / "golden"))
FIXTURES = pathlib.Path(os.environ.get("GITSTAB_FIXTURES", ROOT / "fixtures"))


def run(*args, env=None, stdin=None):
    e = dict(os.environ)
    e.setdefault("GITSTAB_FIXTURES", str(FIXTURES))
    if env:
        e.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=e, input=stdin, timeout=300)


def run_json(*args, **kw):
    r = run(*args, **kw)
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


GOLDENS = {
    "ops.json": ["ops"],
    "ledger.json": ["ledger"],
    "lattice.json": ["lattice"],
    "sing-N0lambda6-ones-fixed.json": ["sing", "--fixture", "N0lambda6-ones", "--pattern", "fixed"],
    "classify-Noplus-lambda4.json": ["classify", "--fixture", "Noplus:lambda4"],
    "classify-luna-center.json": ["classify", "--fixture", "luna-center"],
}


@pytest.mark.parametrize("name", sorted(GOLDENS))
def test_golden(name):
    r = run(*GOLDENS[name])
    assert r.returncode == 0, r.stderr
    assert r.stdout == (GOLDEN / name).read_text()


def test_ops_values():
    doc = run_json("ops")
    assert doc["schema_version"] == 1
    assert doc["candidate_count"] == 556
    assert len(doc["maximal_classes"]) == 8
    verdicts = {c["label"]: c["noplus_verdict"] for c in doc["maximal_classes"]}
    assert sorted(k for k, v in verdicts.items() if v == "StrictlySemistable") == [
        "lambda0", "lambda2", "lambda4", "lambda5", "lambda6"]


def test_small_profiles():
    assert run_json("ops", "--profile", "p1:1")["candidates"] == [[[1, -1]]]
    doc = run_json("monomials", "--profile", "p1:1,p1:1,p2:2")
    assert doc["count"] == 24
    assert doc["monomials"][0] == "x0*y0*z0^2"


def test_jobs_do_not_change_output():
    for args in (["ops"], ["lattice"], ["sing", "--fixture", "N0lambda2-conics", "--pattern", "fixed"]):
        assert run(*args, "--jobs", "1").stdout == run(*args, "--jobs", "4").stdout


def test_classify_input_forms(tmp_path):
    text = "x0*y0*z0^2 + x1*y1*z2^2 + x0*y1*z1^2"
    literal = run_json("classify", "--input", text)
    f = tmp_path / "f.poly"
    f.write_text(text + "\n")
    from_file = run_json("classify", "--input", str(f))
    from_stdin = run_json("classify", "--input", "-", stdin=text)
    assert literal["verdict"] == from_file["verdict"] == from_stdin["verdict"]


def test_rationals_are_strings():
    def walk(x):
        if isinstance(x, float):
            raise AssertionError(x)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)
    for args in (["ledger"], ["sing", "--fixture", "N0lambda5-ones", "--pattern", "fixed"]):
        walk(run_json(*args))
    entry = run_json("ledger")["entries"][0]
    assert entry["computed"] == "27/4"


def test_exit_codes():
    assert run("classify", "--fixture", "Noplus:lambda4", "--expect", "StrictlySemistable").returncode == 0
    assert run("classify", "--fixture", "Noplus:lambda4", "--expect", "Stable").returncode == 1
    # the quoted points of this member are not where its singularities are
    assert run("sing", "--fixture", "N0lambda4-ones", "--pattern", "as-printed").returncode == 1
    assert run("classify", "--input", "x0*y0*z0").returncode == 2
    assert run("classify", "--input", "x0*y0*q0^2").returncode == 2
    assert run("ops", "--profile", "p(1,1,2):2,p2:2").returncode == 2
    assert run("nonsense").returncode == 2
    assert run("sing", "--fixture", "N0lambda6-ones", "--truncation", "2").returncode == 2
    assert run("lattice", "bogus").returncode == 2
    assert run("--help").returncode == 0


def test_parse_error_mentions_location():
    r = run("classify", "--input", "x0*y0*z0^2 +\n x0*y0*z0")
    assert r.returncode == 2
    assert "2:" in r.stderr


def test_out_flag(tmp_path):
    out = tmp_path / "ledger.json"
    r = run("ledger", "--out", str(out))
    assert r.returncode == 0
    assert json.loads(out.read_text())["passed"] is True


def test_fixture_root_override(tmp_path):
    copy = tmp_path / "fx"
    shutil.copytree(FIXTURES, copy)
    doc = run_json("classify", "--fixture", "luna-center", env={"GITSTAB_FIXTURES": str(copy)})
    assert doc["verdict"]["class"] == "StrictlySemistable"
    r = run("classify", "--fixture", "luna-center", env={"GITSTAB_FIXTURES": str(tmp_path / "missing")})
    assert r.returncode == 2


def test_lattice_actions():
    assert run_json("lattice", "signature")["signature"] == [1, 2, 0]
    iso = run_json("lattice", "isotropic", "--target", "5", "--bound", "1")
    assert iso["isotropic"]["vectors"] == [[0, 1, 0], [1, 0, 0]]
    assert run_json("lattice", "isotropic", "--target", "1", "--bound", "50")["isotropic"]["vectors"] == []
    deg = run_json("lattice", "degeneration")["degeneration"]
    assert "flag" in deg
