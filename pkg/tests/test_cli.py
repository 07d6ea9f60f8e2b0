import csv
import io
import json

import pytest

from surface_lie.charring import PowerTracePoly, SymCharacter
from surface_lie.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_dims_csv():
    code, out, _ = call("dims", "--genus", "2", "--max-degree", "6", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["degree", "dimension"]
    assert [tuple(map(int, r)) for r in rows[1:]] == [(1, 4), (2, 5), (3, 16), (4, 45), (5, 144), (6, 440)]


def test_dims_torus_plain():
    code, out, _ = call("dims", "--genus", "1", "--max-degree", "5")
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["2", "0", "0", "0", "0"]


def test_verify_all():
    code, out, _ = call("verify", "all", "--genus", "2", "--order", "8", "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert [d["identity"] for d in docs] == ["log", "pbw", "labute"]
    assert all(d["pass"] for d in docs)


def test_verify_laurent_plain():
    code, out, _ = call("verify", "pbw", "--genus", "1", "--order", "6", "--rep", "laurent")
    assert code == 0 and out.strip() == "pbw: PASS"


@pytest.mark.parametrize("rep,cls", [("laurent", SymCharacter), ("power-trace", PowerTracePoly)])
def test_character_json_roundtrip(rep, cls):
    code, out, _ = call("character", "--genus", "2", "--degree", "4", "--rep", rep, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rep"] == rep
    chi = cls.from_records(doc["genus"], doc["terms"])
    doc2 = dict(doc, terms=chi.to_records())
    assert json.dumps(doc2, indent=2) + "\n" == out


def test_character_plain():
    code, out, _ = call("character", "--genus", "1", "--degree", "2")
    assert out.strip() == "chi_2 = 1/2*q1^2 - 1/2*q2 - 1"


def test_character_laurent_csv():
    code, out, _ = call("character", "--genus", "2", "--degree", "2", "--rep", "laurent", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["e1", "e2", "coefficient"]
    assert rows[1] == ["1", "1", "1"]
    assert sum(int(r[2]) for r in rows[1:]) == 5


def test_decompose_json():
    code, out, _ = call("decompose", "--genus", "2", "--degree", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["decomposition"] == [{"partition": [1, 1], "multiplicity": 1}]


def test_decompose_plain_lists_dimensions():
    code, out, _ = call("decompose", "--genus", "2", "--degree", "4")
    assert out.splitlines() == ["(2) x 1  (dim 10)", "(3,1) x 1  (dim 35)"]


def test_a_coeff_both():
    code, out, _ = call("a-coeff", "--genus", "2", "--degree", "2", "--method", "both", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["methods_agree"] is True
    assert {"monomial": [[1, 2]], "coefficient": "1/2"} in doc["terms"]


def test_oracle_with_matrices(tmp_path):
    m1 = tmp_path / "t.json"
    m1.write_text(json.dumps({"genus": 2, "matrix": [[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}))
    m2 = tmp_path / "s.json"
    m2.write_text(json.dumps({"genus": 2, "matrix": [[0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1]]}))
    code, out, _ = call("oracle", "--genus", "2", "--max-degree", "4", "--matrix", str(m1), "--matrix", str(m2),
                        "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"]
    assert [d["oracle_dimension"] for d in doc["degrees"]] == [4, 5, 16, 45]
    assert all(len(d["traces"]) == 2 for d in doc["degrees"])


def test_oracle_rejects_non_symplectic(tmp_path):
    m = tmp_path / "bad.json"
    m.write_text(json.dumps({"genus": 1, "matrix": [[2, 0], [0, 1]]}))
    code, out, err = call("oracle", "--genus", "1", "--max-degree", "2", "--matrix", str(m))
    assert code == 2
    assert out == ""
    assert "(M^T J M - J)[0][1]" in err


def test_oracle_resource_limit():
    code, out, err = call("oracle", "--genus", "2", "--max-degree", "8", "--format", "json")
    assert code == 2
    assert out == ""
    assert "smaller degree" in err


def test_output_file(tmp_path):
    path = tmp_path / "dims.json"
    code, out, _ = call("dims", "--genus", "3", "--max-degree", "3", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["dimensions"][1] == {"degree": 2, "dimension": 14}


@pytest.mark.parametrize("argv", [
    ["dims", "--genus", "two", "--max-degree", "3"],
    ["dims", "--genus", "0", "--max-degree", "3"],
    ["dims", "--genus", "2"],
    ["frobnicate"],
    ["verify", "everything", "--genus", "2", "--order", "3"],
    ["dims", "--genus", "2", "--max-degree", "3", "--colour"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_verification_failure_exit_code(monkeypatch):
    from surface_lie import formulas
    real = formulas.chi_piece
    monkeypatch.setattr(formulas, "chi_piece", lambda g, n: real(g, n) + (1 if n == 2 else 0))
    code, out, _ = call("verify", "pbw", "--genus", "2", "--order", "4")
    assert code == 1
    assert "FAIL at degree 2" in out
