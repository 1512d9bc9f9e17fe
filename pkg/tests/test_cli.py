import io
import json

import pytest

from filiform.cli import main


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="a.json"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def catalog(*argv):
    code, text = run(["catalog", *argv])
    assert code == 0
    return text


def test_catalog_m1():
    doc = json.loads(catalog("M1", "--n", "6", "--k", "3"))
    assert doc["dim"] == 6 and len(doc["constants"]) == 7


def test_catalog_ngf1_entry():
    doc = json.loads(catalog("NGF1", "--n", "5"))
    assert {"i": 1, "j": 1, "k": 3, "value": "1"} in doc["constants"]


def test_catalog_constraint_violation(capsys):
    code, text = run(["catalog", "NGF3", "--n", "7", "--alpha", "1"])
    assert code == 4 and text == ""
    assert "error:" in capsys.readouterr().err


def test_catalog_f_params():
    doc = json.loads(catalog("F1", "--n", "6", "--param", "alpha4=1/2", "--param", "theta=3"))
    assert doc["name"] == "F1"
    code, _ = run(["catalog", "F1", "--n", "6", "--param", "bogus=1"])
    assert code == 4
    doc = json.loads(catalog("F3", "--n", "6", "--tail", "2,3,6=1"))
    assert {"i": 2, "j": 3, "k": 6, "value": "1"} in doc["constants"]
    code, _ = run(["catalog", "F3", "--n", "7", "--tail", "2,3,6=1"])
    assert code == 4


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "XYZ", "--n", "5"], out=io.StringIO())
    assert exc.value.code == 2


def test_check_ngf2(write):
    code, text = run(["check", write(catalog("NGF2", "--n", "6"))])
    assert code == 0
    assert "leibniz: ok" in text and "filiform: yes" in text and "lie: no" in text


def test_check_abelian(write):
    path = write(json.dumps({"dim": 3, "constants": []}))
    code, text = run(["check", path])
    assert code == 0 and "filiform: no" in text


def test_check_perturbed(write):
    doc = json.loads(catalog("NGF1", "--n", "5"))
    doc["constants"].append({"i": 1, "j": 3, "k": 4, "value": "1"})
    code, text = run(["check", write(json.dumps(doc))])
    assert code == 5
    assert "leibniz: FAILED" in text and "(i=1, j=1, k=1) coefficient of e4: 1" in text


def test_check_malformed(write, capsys):
    code, _ = run(["check", write('{"dim": 3,\n  "constants": [}')])
    assert code == 3
    assert "line 2, column" in capsys.readouterr().err
    code, _ = run(["check", "/nonexistent/file.json"])
    assert code == 3


def test_der_abelian(write):
    code, text = run(["der", write(json.dumps({"dim": 3, "constants": []}))])
    doc = json.loads(text)
    assert code == 0 and doc["dim_der"] == 9 and doc["dim_inn"] == 0 and doc["dim_b2"] == 0


def test_der_m3(write):
    code, text = run(["der", write(catalog("M3", "--n", "7"))])
    doc = json.loads(text)
    assert code == 0
    assert doc["dim_h1"] + doc["dim_inn"] == doc["dim_der"]
    assert doc["dim_b2"] + doc["dim_der"] == 49
    assert all(doc["checks"].values())


def test_der_graded_m1(write):
    code, text = run(["der", write(catalog("M1", "--n", "7", "--k", "6")), "--weights", "1,2,3,4,5,6,5"])
    doc = json.loads(text)
    assert code == 0 and doc["checks"]["graded_dims_sum_to_der"]
    assert "4" in doc["graded"]  # h2 lives at shift k - 2
    assert sum(len(v) for v in doc["graded"].values()) == doc["dim_der"]


def test_der_bad_weights(write):
    code, _ = run(["der", write(catalog("M4", "--n", "5")), "--weights", "1,2,3,4,5"])
    assert code == 5


def test_grade_verify(write):
    path = write(catalog("M4", "--n", "6"))
    code, text = run(["grade", "verify", path, "--weights", "1,-2,-1,0,1,2"])
    assert code == 0 and json.loads(text)["length"] == 5
    code, text = run(["grade", "verify", path, "--weights", "1,2,3,4,5,6"])
    assert code == 5 and json.loads(text)["admissible"] is False
    code, _ = run(["grade", "verify", path, "--weights", "1,2"])
    assert code == 3


def test_grade_search_and_natural(write):
    path = write(catalog("NGF2", "--n", "5"))
    code, text = run(["grade", "search", path, "--bound", "2"])
    doc = json.loads(text)
    # e2 appears in no nonzero product, so its weight is free
    assert code == 0 and doc["length"] == 5
    assert run(["grade", "verify", path, "--weights", ",".join(map(str, doc["weights"]))])[0] == 0
    code, text = run(["grade", "natural", path])
    doc = json.loads(text)
    assert code == 0 and doc["weights"] == [1, 1, 2, 3, 4]


def test_audit_deterministic():
    first = run(["audit", "--n", "5..6"])
    second = run(["audit", "--n", "5..6"])
    assert first == second and first[0] == 0
    assert "MISMATCH" in first[1] and "All structural checks pass: yes" in first[1]


def test_audit_json():
    code, text = run(["audit", "--n", "5", "--format", "json"])
    doc = json.loads(text)
    assert code == 0 and doc["all_structural_checks_pass"] and doc["n_values"] == [5]
    assert {r["family"] for r in doc["rows"]} == {"NGF2", "M1", "M2", "M3", "M4"}


def test_audit_out_of_range():
    assert run(["audit", "--n", "3..5"])[0] == 4
    assert run(["audit", "--n", "9..13"])[0] == 4
