import json
import subprocess
import sys

import pytest

from addax.algebra import dump_json
from addax.catalog import truncated
from addax.cli import main, run

CONIC = {"dim": 3, "name": "conic", "mul": {"1,1": [0, 0, 1]}, "W": [[1, 0]],
         "complement": [0, 1]}
NON_ASSOCIATIVE = {"dim": 4, "mul": {"1,1": [0, 0, 1, 0], "1,2": [0, 0, 0, 1],
                                     "2,2": [0, 0, 0, 1]}}


@pytest.fixture
def write(tmp_path):
    def _write(obj, name="in.json"):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return _write


@pytest.mark.parametrize("argv, expected", [
    (["equation", "--catalog", "truncated:3"], "x0*x2 - 1/2*x1^2"),
    (["equation", "--catalog", "truncated:4"], "x0^2*x3 - x0*x1*x2 + 1/3*x1^3"),
    (["degree", "--catalog", "truncated:5"], '{"degree":4}'),
    (["form", "--catalog", "truncated:3"], '{"degree":2,"dim":3,"entries":{"0,2":"-1","1,1":"1"}}'),
    (["act", "--catalog", "corank_one_n2_split", "--symbolic"],
     "[x0 : x1+a1*x0 : x2+a2*x0 : x3+1/2*a1^2*x0+a1*x1]"),
    (["act", "--catalog", "corank_one_n2_chain", "--symbolic"],
     "[x0 : x1+a1*x0 : x2+(1/6*a1^3+a2)*x0+1/2*a1^2*x1+a1*x3 : x3+1/2*a1^2*x0+a1*x1]"),
    (["act", "--catalog", "truncated:3", "--a", "2"],
     '{"matrix":[["1","0","0"],["2","1","0"],["2","2","1"]],"point":["1","2","2"]}'),
    (["equation", "--catalog", "truncated:3", "--json"], '{"equation":"x0*x2 - 1/2*x1^2"}'),
])
def test_golden(argv, expected):
    assert run(argv) == (0, expected)


def test_classify_outputs():
    code, text = run(["classify", "--catalog", "quadric_nondegenerate:3"])
    out = json.loads(text)
    assert code == 0 and out["case"] == "NONDEGENERATE" and out["rank"] == 5
    assert out["certificate"]["identity"] and out["certificate"]["form_scale"] == "-1"
    code, text = run(["classify", "--catalog", "corank_one:0,0;0,1"])
    out = json.loads(text)
    assert out["case"] == "CORANK_ONE" and out["label"] == "GENERIC_N_GE_3|m=2|t^2 + 1"
    assert out["lambda"] == [["0", "0"], ["0", "1"]]
    code, text = run(["classify", "--catalog", "corank_one_n2_chain"])
    assert json.loads(text)["label"] == "N2_CHAIN"


def test_classify_needs_quadric():
    code, text = run(["classify", "--catalog", "truncated:4"])
    assert code == 1 and json.loads(text)["error"] == "degree"


def test_file_input(write):
    path = write(CONIC)
    assert run(["equation", "--file", path]) == (0, "x0*x2 - 1/2*x1^2")
    out = json.loads(run(["validate", "--file", path])[1])
    assert out == {"valid": True, "kind": "pair", "dim": 3, "filtration": [2, 1, 0], "degree": 2}
    # round trip through the writer
    path2 = write(dump_json(truncated(4)), "t4.json")
    assert run(["equation", "--file", path2]) == run(["equation", "--catalog", "truncated:4"])


def test_validation_report(write):
    code, text = run(["validate", "--file", write(NON_ASSOCIATIVE)])
    out = json.loads(text)
    assert code == 1 and out["error"] == "validation"
    assert out["report"]["axiom"] == "associativity" and out["report"]["witness"] == [1, 1, 2]


def test_error_exits(write, tmp_path):
    assert run(["degree", "--catalog", "nope"])[0] == 1
    assert run(["degree", "--file", str(tmp_path / "missing.json")])[0] == 1
    assert run(["degree", "--file", write({"nodim": 1})])[0] == 1
    assert run(["degree", "--catalog", "square_zero:2"])[0] == 1
    assert run(["act", "--catalog", "truncated:3"])[0] == 1
    assert run(["act", "--catalog", "truncated:3", "--a", "1", "--point", "0,0,0"])[0] == 1
    for argv in (["degree"], ["bogus"], ["degree", "--catalog", "a", "--file", "b"], []):
        with pytest.raises(SystemExit) as exc:
            run(argv)
        assert exc.value.code == 2


def test_invariance_command():
    out = json.loads(run(["invariance", "--catalog", "truncated:4"])[1])
    assert out == {"invariant": True, "symbolic": True, "numeric": True, "witness": None}
    out = json.loads(run(["invariance", "--catalog", "truncated:3", "--poly", "x0*x1"])[1])
    assert not out["invariant"] and out["witness"][0] == "derivation"


def test_pretty():
    code, text = run(["form", "--catalog", "truncated:3", "--pretty"])
    assert code == 0
    assert text.splitlines() == ["degree: 2", "dim: 3", "entries:", '  0,2: "-1"', '  1,1: "1"']


def test_catalog_list():
    names = json.loads(run(["catalog-list"])[1])["catalog"]
    assert "truncated:<k>" in names and "corank_one_n2_chain" in names


def test_main_writes_stdout(capsys):
    assert main(["degree", "--catalog", "truncated:3"]) == 0
    assert capsys.readouterr().out == '{"degree":2}\n'


def test_subprocess_bytes_deterministic():
    argv = [sys.executable, "-m", "addax.cli", "classify", "--catalog", "corank_one:0,0,0;0,1,0;0,0,2"]
    outs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0].endswith(b"\n")
    bad = subprocess.run([sys.executable, "-m", "addax.cli", "degree"], capture_output=True)
    assert bad.returncode == 2
