import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from magmon import Algebra
from magmon.cli import main

from conftest import NAND_TABLE, SAMPLE3_TABLE


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def nand_path(tmp_path):
    path = tmp_path / "nand.tbl"
    path.write_text(Algebra(NAND_TABLE).to_text())
    return str(path)


@pytest.fixture
def sample3_path(tmp_path):
    path = tmp_path / "sample3.tbl"
    path.write_text(Algebra(SAMPLE3_TABLE).to_text())
    return str(path)


def test_array_text(nand_path):
    code, out, err = run_cli(["array", "--algebra", nand_path, "--n", "3"])
    assert code == 0 and err == ""
    assert out == "(x1*(x2*x3)): 11110001\n((x1*x2)*x3): 10101011\n"


def test_array_csv_and_json(nand_path):
    code, out, _ = run_cli(["array", "--algebra", nand_path, "--n", "2", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[0] == "x1,x2,(x1*x2)"
    code, out, _ = run_cli(["array", "--algebra", nand_path, "--n", "2", "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["columns"] == [[1, 1, 1, 0]]


def test_array_identity_column(nand_path):
    code, out, _ = run_cli(["array", "--algebra", nand_path, "--n", "1"])
    assert code == 0
    assert out == "x1: 01\n"


def test_array_cap_exit_code(sample3_path):
    code, _, err = run_cli(["array", "--algebra", sample3_path, "--n", "4", "--cap", "10"])
    assert code == 3
    assert "cap" in err


def test_bad_algebra_file_exit_code(tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 1\n")
    code, _, err = run_cli(["array", "--algebra", str(bad), "--n", "2"])
    assert code == 2
    assert "error:" in err


def test_missing_algebra_file_exit_code(tmp_path):
    code, _, err = run_cli(["array", "--algebra", str(tmp_path / "nope.tbl"), "--n", "2"])
    assert code == 2


def test_bad_flag_exit_code(nand_path):
    code, _, _ = run_cli(["array", "--algebra", nand_path, "--n", "2", "--format", "yaml"])
    assert code == 2


def test_monoid_text(sample3_path):
    code, out, _ = run_cli(["monoid", "--algebra", sample3_path])
    assert code == 0
    lines = out.splitlines()
    assert "monoid size: 7" in lines
    assert "latin square: no" in lines
    assert "(0,1,2)  rank=3  word=e" in lines
    assert "(1,0,0)  rank=2  word=L0" in lines


def test_monoid_latin_square_flag(tmp_path):
    path = tmp_path / "z2.tbl"
    path.write_text("2\n0 1\n1 0\n")
    code, out, _ = run_cli(["monoid", "--algebra", str(path)])
    assert code == 0
    assert "latin square: yes (all ranks = 2)" in out


def test_monoid_json_round_trip(sample3_path):
    code, out, _ = run_cli(["monoid", "--algebra", sample3_path, "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["size"] == 7
    assert len(obj["elements"]) == 7
    assert obj["ideal_edges"] == [[1, 0], [2, 1], [3, 2]]


def test_monoid_dot(sample3_path):
    code, out, _ = run_cli(["monoid", "--algebra", sample3_path, "--format", "dot"])
    assert code == 0
    assert out.startswith("digraph jorder {")
    assert out.count("->") == 3


def test_jclasses_text(sample3_path):
    code, out, _ = run_cli(["jclasses", "--algebra", sample3_path])
    assert code == 0
    assert out.splitlines()[0] == "4 J-classes"
    assert "rank=1: (0,0,0) (1,1,1)" in out


def test_ideals_text(sample3_path):
    code, out, _ = run_cli(["ideals", "--algebra", sample3_path])
    assert code == 0
    assert "I_1: (0,0,0) (1,1,1)" in out
    assert "minimal ideal: rank=1 members=(0,0,0) (1,1,1)" in out


def test_ideals_empty_rank_layer(tmp_path):
    path = tmp_path / "z3.tbl"
    path.write_text("3\n0 1 2\n1 2 0\n2 0 1\n")
    code, out, _ = run_cli(["ideals", "--algebra", str(path)])
    assert code == 0
    assert "I_1: (empty)" in out
    assert "I_2: (empty)" in out


def test_realize_text(nand_path):
    code, out, _ = run_cli(["realize", "--algebra", nand_path, "--map", "1,1"])
    assert code == 0
    assert "word: L0" in out
    assert "bracketing: (x1*x2)" in out
    assert "roundtrip: ok" in out


def test_realize_json(sample3_path):
    code, out, _ = run_cli(
        ["realize", "--algebra", sample3_path, "--map", "0,0,1", "--format", "json"]
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["roundtrip_ok"] is True
    assert obj["context_map"] == [0, 0, 1]


def test_realize_bad_map(nand_path):
    for bad in ("1,2", "1", "a,b"):
        code, _, err = run_cli(["realize", "--algebra", nand_path, "--map", bad])
        assert code == 2, bad
        assert "error:" in err


def test_realize_unrealizable_map(tmp_path):
    # constant-0 table: monoid is {identity, constant 0}; (1,1) is unreachable
    path = tmp_path / "const.tbl"
    path.write_text("2\n0 0\n0 0\n")
    code, _, err = run_cli(["realize", "--algebra", str(path), "--map", "1,1"])
    assert code == 2
    assert "not in the translation monoid" in err


def test_verify_passes_on_file(sample3_path):
    code, out, _ = run_cli(["verify", "--algebra", sample3_path, "--n", "3"])
    assert code == 0
    assert out.splitlines()[-1] == "result: PASS (1/1 algebras)"
    assert out.count("PASS") >= 10


def test_verify_checks_subset(nand_path):
    code, out, _ = run_cli(
        ["verify", "--algebra", nand_path, "--checks", "block-law,rank-monotonic"]
    )
    assert code == 0
    assert "block-law" in out and "rank-monotonic" in out
    assert "context-in-monoid" not in out


def test_verify_unknown_check(nand_path):
    code, _, err = run_cli(["verify", "--algebra", nand_path, "--checks", "bogus"])
    assert code == 2
    assert "unknown check" in err


def test_verify_random_algebras():
    code, out, _ = run_cli(["verify", "--size", "3", "--seed", "1", "--count", "5", "--n", "3"])
    assert code == 0
    assert out.splitlines()[-1] == "result: PASS (5/5 algebras)"


def test_verify_requires_source():
    code, _, err = run_cli(["verify"])
    assert code == 2
    assert "--algebra" in err


def test_verify_json(nand_path):
    code, out, _ = run_cli(["verify", "--algebra", nand_path, "--n", "2", "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] is True
    assert len(obj["algebras"][0]["results"]) == 10


def test_verify_exit_one_on_failure(nand_path, monkeypatch):
    from magmon.checks import CheckResult

    def fake_run_checks(*args, **kwargs):
        return [CheckResult("block-law", False, 1, "forced failure", "n=1 t=0")]

    monkeypatch.setattr("magmon.cli.run_checks", fake_run_checks)
    code, out, _ = run_cli(["verify", "--algebra", nand_path])
    assert code == 1
    assert "FAIL block-law" in out
    assert "counterexample: n=1 t=0" in out


def test_random_algebra_deterministic_and_valid():
    first = run_cli(["random-algebra", "--size", "3", "--seed", "7"])
    second = run_cli(["random-algebra", "--size", "3", "--seed", "7"])
    assert first == second
    code, out, _ = first
    assert code == 0
    alg = Algebra.from_text(out)
    assert alg.m == 3
    other = run_cli(["random-algebra", "--size", "3", "--seed", "8"])[1]
    assert other != out


def test_random_algebra_size_one():
    code, out, _ = run_cli(["random-algebra", "--size", "1", "--seed", "3"])
    assert code == 0
    assert out == "1\n0\n"


def test_out_flag_writes_file(tmp_path, nand_path):
    target = tmp_path / "array.csv"
    code, out, _ = run_cli(
        ["array", "--algebra", nand_path, "--n", "2", "--format", "csv", "--out", str(target)]
    )
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[0] == "x1,x2,(x1*x2)"


def test_algebra_file_round_trip_through_cli(tmp_path):
    code, out, _ = run_cli(["random-algebra", "--size", "4", "--seed", "11"])
    assert code == 0
    path = tmp_path / "rt.tbl"
    path.write_text(out)
    code2, out2, _ = run_cli(["monoid", "--algebra", str(path)])
    assert code2 == 0
