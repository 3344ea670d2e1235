from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path


from spherelike import cli, corpus
from spherelike.homcx import hom
from spherelike.kgroup import asphericality_class, curve_sheaf_class, ruled_elliptic_model
from spherelike.sphere import analyze

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(*argv, capsys):
    code = cli.main([str(a) for a in argv])
    return code, json.loads(capsys.readouterr().out)


def d(name):
    return DATA / name


def test_analyze_kronecker(capsys):
    code, rep = run("analyze", d("kronecker.alg"), d("kronecker_R_half.cx"), capsys=capsys)
    assert code == 0
    res = rep["result"]
    assert res["verdict"] == "1-spherelike, spherical"
    assert res["hom_table"] == {"0": 1, "1": 1}
    assert res["asphericality"]["spherical"] is True
    assert res["asphericality"]["Q_independent_of_w"] is True
    assert set(rep["inputs"]) == {str(d("kronecker.alg")), str(d("kronecker_R_half.cx"))}


def test_analyze_matches_library(capsys, a3_objs):
    code, rep = run("analyze", d("a3.alg"), d("a3_F.cx"), capsys=capsys)
    lib = analyze(a3_objs["F"])
    res = rep["result"]
    assert code == 0
    assert res["verdict"] == lib.verdict
    assert res["asphericality"]["Q_terms"] == {
        str(n): [f"P{v}" for v in vs] for n, vs in lib.asphericality.Q.graded_terms().items()
    }
    assert res["asphericality"]["Q_independent_of_w"] is True


def test_analyze_exceptional(capsys):
    code, rep = run("analyze", d("kronecker.alg"), d("kronecker_P1.cx"), capsys=capsys)
    assert code == 0 and rep["result"]["verdict"] == "exceptional"
    assert "asphericality" not in rep["result"]


def test_twist_commands(capsys):
    code, rep = run("twist", d("kronecker.alg"), d("kronecker_R_half.cx"), d("kronecker_R_2.cx"), capsys=capsys)
    assert code == 0 and rep["result"]["isomorphic_to_input"] is True
    code, rep = run("twist", d("kronecker.alg"), d("kronecker_R_half.cx"), d("kronecker_P1.cx"), "--left", capsys=capsys)
    assert rep["result"]["functor"] == "left_twist"
    assert rep["result"]["isomorphic_to_input"] is False


def test_member_command(capsys, a3_objs):
    code, rep = run("member", d("a3.alg"), d("a3_F.cx"), d("a3_P2.cx"), capsys=capsys)
    assert code == 0 and rep["result"]["member"] is False
    code, rep = run("member", d("a3.alg"), d("a3_F.cx"), d("a3_F.cx"), capsys=capsys)
    assert rep["result"]["member"] is True
    assert rep["result"]["witness_hom_UQ"] == {}


def test_member_precondition_exit_code(capsys):
    code, rep = run("member", d("kronecker.alg"), d("kronecker_P1.cx"), d("kronecker_P2.cx"), capsys=capsys)
    assert code == 2
    assert rep["exit_code"] == 2
    assert rep["result"]["classification"] == "exceptional"


def test_kgroup_commands(capsys):
    code, rep = run("kgroup", "involution", d("hyperbolic.lat"), "--f", "1,0", capsys=capsys)
    assert code == 0 and rep["result"]["involution"] is True
    assert rep["result"]["reflect_f"] == ["-1", "0"]
    code, rep = run("kgroup", "involution", d("exceptional.lat"), "--f", "1,0", capsys=capsys)
    assert code == 2
    code, rep = run("kgroup", "braid", d("orthogonal.lat"), "--e", "1,0", "--f", "0,1", capsys=capsys)
    assert rep["result"]["verdict"] == "commute"


def test_kgroup_surface_matches_library(capsys):
    code, rep = run(
        "kgroup", "surface", d("ruled.surf"), "--class", "class r=0 c1=(0,1) ch2=0", "--d", "1",
        capsys=capsys,
    )
    M = ruled_elliptic_model()
    F = curve_sheaf_class(M, (0, 1), 0)
    Q = asphericality_class(M, F, 1)
    assert code == 0
    assert rep["result"]["asphericality_class"] == [f"class r={Q.r} c1=({Q.c1[0]},{Q.c1[1]}) ch2={Q.s}"]
    assert rep["result"]["asphericality_class"] == ["class r=0 c1=(0,-2) ch2=2"]


def test_input_errors(capsys, tmp_path):
    code, rep = run("analyze", d("kronecker.alg"), tmp_path / "missing.cx", capsys=capsys)
    assert code == 1 and "cannot read" in rep["error"]
    bad = tmp_path / "bad.cx"
    bad.write_text("complex\nterm 0 P9\n")
    code, rep = run("analyze", d("kronecker.alg"), bad, capsys=capsys)
    assert code == 1 and "line 2" in rep["error"]
    code, rep = run("analyze", capsys=capsys)
    assert code == 1


def test_json_flag_and_determinism(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["analyze", str(d("a3.alg")), str(d("a3_F.cx"))]
    assert cli.main(["--json", str(out1)] + args) == 0
    assert cli.main(args + ["--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert "--json" not in json.loads(out1.read_text())["command"]


def test_seed_is_recorded(capsys):
    code, rep = run("--seed", "5", "--trials", "3", "twist", d("kronecker.alg"), d("kronecker_R_half.cx"),
                    d("kronecker_P1.cx"), capsys=capsys)
    assert (rep["seed"], rep["trials"]) == (5, 3)


def test_batch_runs_every_line(tmp_path):
    out = tmp_path / "batch.json"
    assert cli.main(["--seed", "0", "--batch", str(d("batch.txt")), "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    lines = [l.split("#")[0].strip() for l in d("batch.txt").read_text().splitlines()]
    assert len(payload["reports"]) == sum(1 for l in lines if l)
    codes = {r["exit_code"] for r in payload["reports"]}
    assert codes <= {0, 2} and 0 in codes


def test_cli_entry_point_runs_as_module(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "spherelike.cli", "analyze", str(d("cycle.alg")), str(d("cycle_P1.cx"))],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["verdict"] == "0-spherelike, nilpotent, spherical"


def test_hom_table_agrees(capsys, kron_objs):
    code, rep = run("twist", d("kronecker.alg"), d("kronecker_R_half.cx"), d("kronecker_R_2.cx"), capsys=capsys)
    expected = hom(kron_objs["R_lambda"], corpus.skyscraper(corpus.kronecker(), 2)).dims()
    assert rep["result"]["hom_table_FA"] == {str(k): v for k, v in expected.items()}
