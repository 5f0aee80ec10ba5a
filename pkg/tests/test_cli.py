import json
import subprocess
import sys

import pytest

from fillingcurves.cli import main

F = "fixture:genus2_type248"


def run(args):
    proc = subprocess.run(
        [sys.executable, "-m", "fillingcurves", *args], capture_output=True, text=True, timeout=120
    )
    return proc.returncode, proc.stdout, proc.stderr


def run_json(args):
    code, out, err = run(args)
    assert code == 0, err
    return json.loads(out)


def test_analyze():
    out = run_json(["analyze", F])
    assert out["classification"]["genus"] == 2
    assert out["passport"]["type"] == [2, 4, 8]
    assert out["filling_curve"] is True


def test_components():
    out = run_json(["components", "fixture:genus2_type266"])
    assert out["r"] == 3
    assert out["straight_step"] == "(1,10)(2,11)(3,12)(4,7)(5,8)(6,9)"


def test_minlength_auto_detects_formula(tmp_path):
    out = run_json(["minlength", F])
    assert out["formula"] == "clean" and (out["m"], out["k"], out["d"]) == (2, 8, 8)
    assert out["total"] == pytest.approx(12.228567355847985, rel=1e-13)
    p = tmp_path / "bip.json"
    p.write_text(json.dumps({"degree": 8, "sigma0": [[1, 2, 3, 4], [5, 6, 7, 8]], "sigma1": [[1, 5, 3, 7], [2, 8, 4, 6]]}))
    bip = run_json(["minlength", str(p)])
    assert bip["formula"] == "bipartite"
    assert bip["total"] == pytest.approx(out["total"], rel=1e-12)


def test_dual_medial_round_trip(tmp_path):
    out = run_json(["dual", "fixture:dual_pair"])
    assert out["sigma1"] == [[1, 5, 9, 7, 2, 3], [4, 8, 12, 10, 11, 6]]
    p = tmp_path / "bip.json"
    p.write_text(json.dumps({"degree": 8, "sigma0": [[1, 2, 3, 4], [5, 6, 7, 8]], "sigma1": [[1, 5, 3, 7], [2, 8, 4, 6]]}))
    med = run_json(["medial", str(p)])
    assert med["degree"] == 16


def test_surgery_seed_grow(tmp_path):
    out = run_json(["surgery", F, "--a", "4", "--b", "13"])
    assert out["case"] == "same_face"
    seed = run_json(["seed", "--genus", "2", "--faces", "1"])
    p = tmp_path / "seed.json"
    p.write_text(json.dumps(seed))
    grown = run_json(["grow", str(p), "--genus", "4"])
    assert grown["passport"]["type"] == [2, 4, 28]


def test_enumerate_and_progress():
    code, out, err = run(["enumerate", "--type", "2,4,12", "--genus", "2", "--progress"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 6 and data["filling_count"] == 1
    assert "subtree" in err
    par = run_json(["enumerate", "--type", "2,4,12", "--genus", "2", "--jobs", "2"])
    assert json.dumps(par, sort_keys=True) == json.dumps(data, sort_keys=True)


def test_word():
    out = run_json(["word", "z3xz", F, "--type", "2,4,8"])
    assert out["in_K"] is True and out["matrix"]["kind"] == "hyperbolic"
    out = run_json(["word", "x", F])
    assert out["in_K"] is False and out["image_of_base"] == 16
    code, _, err = run(["word", "x", F, "--type", "2,6,6"])
    assert code == 1 and json.loads(err)["error"] == "type_mismatch"


def test_pairings_render_verify(tmp_path):
    out = run_json(["pairings", F])
    assert all(p["kind"] in ("hyperbolic", "identity") for p in out["pairings"])
    svg = tmp_path / "d.svg"
    code, _, _ = run(["render", F, "-o", str(svg)])
    assert code == 0 and svg.read_text().count('class="quad"') == 16
    rep = run_json(["verify", F])
    assert rep["passed"] is True


def test_exit_codes(tmp_path):
    code, _, err = run(["bogus"])
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run(["enumerate", "--type", "2,4", "--genus", "2"])
    assert code == 2
    code, _, err = run(["seed", "--genus", "9", "--faces", "1"])
    assert code == 1 and json.loads(err)["error"] == "no_seed"
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 16, "sigma0": [[1, 16]], "sigma1": [[1, 2, 3]], "x": 1}')
    code, _, err = run(["analyze", str(bad)])
    assert code == 1 and json.loads(err)["error"] == "schema"
    code, _, err = run(["analyze", str(tmp_path / "nope.json")])
    assert code == 1


def test_outputs_are_stable():
    for args in (["analyze", F], ["pairings", F], ["render", F], ["components", F]):
        assert run(args)[1] == run(args)[1]


def test_main_in_process(capsys):
    assert main(["minlength", F]) == 0
    assert json.loads(capsys.readouterr().out)["formula"] == "clean"
