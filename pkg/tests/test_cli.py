import json

import pytest

from lsaforge.cli import run


def go(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def nab_file(tmp_path):
    path = tmp_path / "nab.json"
    assert run(["catalog", "emit", "dim2_nonabelian",
                "--out", str(path)]) == 0
    return str(path)


def test_catalog_list(capsys):
    code, out, err = go(capsys, ["catalog", "list"])
    assert code == 0
    assert "dim2_nonabelian" in out
    assert "assoc_type_two" in out


def test_check_pass_and_fail(capsys, nab_file):
    code, out, _ = go(capsys, ["check", nab_file, "--pred", "left_symmetric"])
    assert code == 0
    assert "PASS check:left_symmetric" in out
    code, out, _ = go(capsys, ["check", nab_file, "--pred", "associative"])
    assert code == 1
    assert out.splitlines()[-1].startswith("FAIL check:associative")
    assert "witness=" in out


def test_check_unknown_predicate(capsys, nab_file):
    code, _, err = go(capsys, ["check", nab_file, "--pred", "nope"])
    assert code == 2
    assert "nope" in err


def test_report_header_and_determinism(capsys, nab_file):
    capsys.readouterr()   # drop fixture output
    first = go(capsys, ["check", nab_file, "--pred", "left_symmetric"])
    second = go(capsys, ["check", nab_file, "--pred", "left_symmetric"])
    assert first == second
    lines = first[1].splitlines()
    assert lines[0] == "# lsaforge report"
    assert lines[1].startswith("# command: lsaforge check")
    assert lines[2] == "# seed: 0"
    assert lines[3] == ""


def test_unknown_top_level_key(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(
        {"dim": 2, "basis": ["e1", "e2"], "product": [], "extra": 1}))
    code, _, err = go(capsys, ["check", str(path), "--pred", "abelian"])
    assert code == 2
    assert "unknown keys extra" in err


def test_bad_rational_reports_path(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(
        {"dim": 2, "basis": ["e1", "e2"],
         "product": [{"left": "e1", "right": "e2",
                      "result": {"e1": "1.5"}}]}))
    code, _, err = go(capsys, ["check", str(path), "--pred", "abelian"])
    assert code == 2
    assert "product[0].result.e1" in err
    assert "1.5" in err


def test_dim_cap(capsys, nab_file, monkeypatch):
    monkeypatch.setenv("LSA_FORGE_MAX_DIM", "1")
    code, _, err = go(capsys, ["check", nab_file, "--pred", "abelian"])
    assert code == 2
    assert "dim" in err


def test_build_phase_artifact(capsys, nab_file, tmp_path):
    out_file = tmp_path / "phase.json"
    code, out, _ = go(capsys, ["build", "phase", nab_file,
                               "--out", str(out_file)])
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["dim"] == 4
    code, _, _ = go(capsys, ["check", str(out_file),
                             "--pred", "left_symmetric"])
    assert code == 0


def test_build_quadratic_requires_n(capsys, tmp_path):
    # input must be a Lie bracket table
    path = tmp_path / "aff.json"
    path.write_text(json.dumps(
        {"dim": 2, "basis": ["e1", "e2"],
         "product": [{"left": "e1", "right": "e2", "result": {"e1": "1"}},
                     {"left": "e2", "right": "e1",
                      "result": {"e1": "-1"}}]}))
    code, _, err = go(capsys, ["build", "quadratic", str(path)])
    assert code == 2
    assert "n=" in err
    code, out, _ = go(capsys, ["build", "quadratic", str(path),
                               "--param", "n=2"])
    assert code == 0
    assert any(line.startswith("PASS") for line in out.splitlines())


def test_build_twist_rejected_math(capsys, tmp_path):
    # a bracket table whose product is not left symmetric: rejection is a
    # FAIL report with exit 1, not a crash
    path = tmp_path / "aff.json"
    path.write_text(json.dumps(
        {"dim": 2, "basis": ["e1", "e2"],
         "product": [{"left": "e1", "right": "e2", "result": {"e1": "1"}},
                     {"left": "e2", "right": "e1", "result": {"e1": "-1"}}],
         "tensors": {"r": [["0", "1"], ["-1", "0"]]}}))
    code, out, _ = go(capsys, ["build", "twist", str(path),
                               "--tensor", "r"])
    assert code == 1
    assert out.splitlines()[-1].startswith("FAIL")


def test_normalize_dim2(capsys, nab_file):
    code, out, _ = go(capsys, ["normalize", "dim2", nab_file])
    assert code == 0
    assert "PASS normalize  family=dim2_nonabelian" in out
    assert "param a=1" in out
    assert "fingerprint dim=2" in out


def test_classify_compat2(capsys, tmp_path):
    path = tmp_path / "c1.json"
    assert run(["catalog", "emit", "compat_family1", "--out", str(path)]) == 0
    code, out, _ = go(capsys, ["classify", "compat2", str(path)])
    assert code == 0
    assert "PASS classify  kind=compat_family1" in out
    assert "param a=1" in out and "param b=1" in out


def test_catalog_emit_with_override(capsys, tmp_path):
    path = tmp_path / "nab2.json"
    code, _, _ = go(capsys, ["catalog", "emit", "dim2_nonabelian",
                             "--param", "a=2", "--out", str(path)])
    assert code == 0
    data = json.loads(path.read_text())
    entries = {(e["left"], e["right"]): e["result"] for e in data["product"]}
    assert entries[("e1", "e2")] == {"e1": "2"}


def test_lts_verify(capsys, tmp_path):
    path = tmp_path / "triple.json"
    path.write_text(json.dumps({"dim": 2, "basis": ["x", "y"], "triple": []}))
    code, out, _ = go(capsys, ["lts", "verify", str(path)])
    assert code == 0
    assert "PASS alternating" in out
    assert "PASS cyclic" in out
    assert "PASS derivation" in out
    bad = tmp_path / "bad_triple.json"
    bad.write_text(json.dumps(
        {"dim": 2, "basis": ["x", "y"],
         "triple": [{"first": "x", "second": "x", "third": "y",
                     "result": {"x": "1"}}]}))
    code, out, _ = go(capsys, ["lts", "verify", str(bad)])
    assert code == 1
    assert "FAIL alternating" in out


def test_missing_file(capsys, tmp_path):
    code, _, err = go(capsys, ["check", str(tmp_path / "nope.json"),
                               "--pred", "abelian"])
    assert code == 2
