from __future__ import annotations

import json
import shutil

import pytest
from click.testing import CliRunner

from hcpair.cli import main
from hcpair.corpus import corpus_dir


def _path(name):
    return str(corpus_dir() / name)


def _run(*args):
    return CliRunner().invoke(main, list(args))


def _json(res):
    return json.loads(res.stdout)


def test_build_h_of_sign_pair():
    res = _run("build-h", _path("z2_pair.json"))
    assert res.exit_code == 0
    out = _json(res)
    assert out["status"] == "pass" and out["dim"] == 4


def test_build_a_over_f3():
    res = _run("build-a", _path("z2_hcp.json"), "--field", "Fp:3")
    assert res.exit_code == 0
    assert _json(res)["dim"] == 4


def test_broken_pair_reports_condition_c():
    res = _run("verify-dhcp", _path("broken_c.json"))
    assert res.exit_code == 1
    checks = {c["name"]: c for r in _json(res)["reports"] for c in r["checks"]}
    assert not checks["(c) self-bracket"]["passed"]
    assert checks["(c) self-bracket"]["witness"]["basis"] == ["v"]


def test_jacobi_failure_is_a_verification_failure():
    assert _run("verify-dhcp", _path("jacobi_broken.json")).exit_code == 1


def test_input_errors_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "hopf", "body": {"basis": 3}}')
    res = _run("verify-hopf", str(bad))
    assert res.exit_code == 2
    assert "$.body" in res.stderr
    assert _run("verify-hopf", str(tmp_path / "missing.json")).exit_code == 2
    assert _run("verify-hopf", _path("z2_group.json"), "--field", "R").exit_code == 2


@pytest.mark.parametrize("field", ["Fp:2", "GF(2)"])
def test_characteristic_two_exits_three(field):
    assert _run("verify-hopf", _path("z2_group.json"), "--field", field).exit_code == 3


def test_lie_superalgebra_in_characteristic_three_exits_three():
    res = _run("verify-dhcp", _path("gl11.json"), "--field", "Fp:3")
    assert res.exit_code == 3
    assert "(c)" in res.stderr and "(d)" in res.stderr


def test_output_is_deterministic():
    args = ("build-a", _path("s3_sign_hcp.json"))
    assert _run(*args).stdout == _run(*args).stdout


def test_table_output_and_timings():
    res = _run("verify-hopf", _path("wedge2.json"), "--out", "table", "--timings")
    assert res.exit_code == 0
    assert "dim: 4" in res.stdout and "time:" in res.stdout
    assert "timings" in _json(_run("verify-hopf", _path("wedge2.json"), "--timings"))


def test_normalize_word():
    out = _json(_run("normalize", _path("z2_pair.json"), "--word", "x g x"))
    assert out["normal_form"] == "0"
    out = _json(_run("normalize", _path("heisenberg_odd.json"), "--word", "y x", "--strict"))
    assert out["normal_form"] == "h - x·y"


def test_overlaps_pair_and_roundtrip():
    assert _run("check-overlaps", _path("s3_sign_pair.json")).exit_code == 0
    assert _run("check-overlaps", _path("broken_c.json")).exit_code == 1
    assert _run("verify-hcp", _path("broken_coaction.json")).exit_code == 1
    assert _run("pair", _path("charp_hcp_f3.json")).exit_code == 0
    for name in ("z2_pair.json", "z2_mixed_hcp.json", "z2_smash_wedge.json"):
        assert _run("roundtrip", _path(name)).exit_code == 0, name


def test_enveloping_build_is_bounded():
    out = _json(_run("build-h", _path("osp12.json"), "--degree-bound", "2"))
    assert out["dim"] == "infinite"
    assert out["status"] == "pass"


def test_classify_corpus(tmp_path):
    res = _run("classify", str(corpus_dir()))
    assert res.exit_code == 0
    rows = {r["file"]: r for r in _json(res)["rows"]}
    assert rows["wedge1.json"]["irreducible"] and not rows["wedge1.json"]["semisimple"]
    assert rows["broken_c.json"]["valid"] is False
    assert rows["unipotent_hcp_f3.json"]["unipotence_agree"]
    shutil.copy(corpus_dir() / "z2_group.json", tmp_path)
    (tmp_path / "junk.json").write_text("[")
    res = _run("classify", str(tmp_path), "--out", "table")
    assert res.exit_code == 2
    assert "junk.json" in res.stdout
