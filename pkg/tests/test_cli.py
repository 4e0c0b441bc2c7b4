import json
import subprocess
import sys
from pathlib import Path

import pytest

from csgin import cli
from csgin.monomial import MonomialIdeal

DATA = Path(__file__).resolve().parent.parent / "data"


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gin_report(capsys):
    code, out, _ = run(["gin", "--ideal", str(DATA / "block33.json")], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["results"]["is_CS"] is False
    assert len(rep["results"]["gin"]) == 7
    assert rep["results"]["MDeg"] == rep["results"]["GDeg"] == "z1^3 + z1^2*z2 + z1*z2^2 + z2^3"
    assert rep["seeds"] == [1, 2, 3]
    assert "timing_s" not in rep


def test_edge_check_passes(capsys):
    code, out, _ = run(["edge", "--graph", str(DATA / "p3.json"), "--check"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["verdicts"] == {"path_gin = gin": "PASS", "primes intersect to path_gin": "PASS"}
    assert rep["results"]["path_gin"] == rep["results"]["gin"]


def test_edge_list_input(capsys):
    code, out, _ = run(["edge", "--graph", str(DATA / "c5.txt")], capsys)
    assert code == 0 and json.loads(out)["results"]["graph"]["n"] == 5


def test_closure_report(capsys):
    code, out, _ = run(["closure", "--input", str(DATA / "closure6.json"), "--check"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert len(rep["results"]["matroid_bases"]) == 13
    assert rep["results"]["MDeg"] == "z1^2*z2 + z1^2*z3 + z1*z2*z3 + z1*z3^2 + z2*z3^2 + z3^3"
    assert set(rep["verdicts"].values()) == {"PASS"}


def test_multiview_and_multidegree(capsys):
    code, out, _ = run(["multiview", "--input", str(DATA / "cameras22.json"), "--check"], capsys)
    assert code == 0 and len(json.loads(out)["results"]["ideal"]) == 1
    code, out, _ = run(["multidegree", "--ideal", str(DATA / "block33.json")], capsys)
    assert code == 0 and json.loads(out)["results"]["multiplicity_free"] is True


def test_conjecture(capsys):
    code, out, _ = run(["conjecture", "--ideal", str(DATA / "squarefree.json")], capsys)
    assert code == 0
    assert json.loads(out)["results"]["cohomology_equal"] is True
    code, _, err = run(["conjecture", "--ideal", str(DATA / "block33.json")], capsys)
    assert code == 1 and "Cartwright-Sturmfels" in err


def test_malformed_json_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"blocks": [2],\n "generators": ["x1_1" }\n')
    code, _, err = run(["gin", "--ideal", str(bad)], capsys)
    assert code == 1
    assert "line 2 column" in err


def test_input_errors(tmp_path, capsys):
    code, _, err = run(["gin", "--ideal", str(tmp_path / "missing.json")], capsys)
    assert code == 1
    p = tmp_path / "inhom.json"
    p.write_text(json.dumps({"blocks": [1, 1], "generators": ["x1_1 + x2_1"]}))
    code, _, err = run(["gin", "--ideal", str(p)], capsys)
    assert code == 1 and "homogeneous" in err
    code, _, err = run(["verify-all", "--suites", "42"], capsys)
    assert code == 1


def test_verification_failure_exit_code(monkeypatch, capsys):
    def wrong(G, field=None):
        from csgin.edge import edge_ring

        return MonomialIdeal.parse(edge_ring(G.n, field), ["x1"])

    monkeypatch.setattr(cli, "path_gin", wrong)
    code, out, err = run(["edge", "--graph", str(DATA / "p3.json"), "--check"], capsys)
    assert code == 2
    rep = json.loads(out)
    assert rep["counterexample"]["invariant"] == "path_gin = gin"
    assert rep["counterexample"]["graph"] == {"n": 3, "edges": [[1, 2], [2, 3]]}
    assert "verification failed" in err


def test_field_order_seed_flags(capsys):
    code, out, _ = run(["gin", "--ideal", str(DATA / "block33.json"), "--field", "Fp:101", "--order", "lex", "--seed", "4,5"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["results"]["field"] == "Fp:101" and rep["results"]["order"] == "lex" and rep["seeds"] == [4, 5]


def test_out_file_and_byte_identical_reports(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, out, _ = run(["closure", "--input", str(DATA / "closure6.json"), "--check", "--out", str(path)], capsys)
        assert code == 0 and out == ""
    # the command echo contains the --out path; everything else must match byte for byte
    ja, jb = json.loads(a.read_text()), json.loads(b.read_text())
    ja.pop("command"), jb.pop("command")
    assert json.dumps(ja) == json.dumps(jb)
    code, first, _ = run(["closure", "--input", str(DATA / "closure6.json"), "--check"], capsys)
    code, second, _ = run(["closure", "--input", str(DATA / "closure6.json"), "--check"], capsys)
    assert first == second


def test_verify_all_subset(capsys):
    code, out, _ = run(["verify-all", "--suites", "1,2,3", "--timing"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert sorted(rep["results"]["suites"]) == ["1", "2", "3"]
    assert all("elapsed_s" in s for s in rep["results"]["suites"].values())


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "csgin.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "verify-all" in out.stdout


def test_usage_errors_are_input_errors(capsys):
    for argv in (["gin", "--ideal", str(DATA / "block33.json"), "--field", "F4"], ["gin"], ["nope"]):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 1
    assert "error" in capsys.readouterr().err
