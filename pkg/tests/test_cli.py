import io
import json

import pytest

from onesided.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_genus():
    assert call("genus", "10", "3") == (0, "3\n", "")
    assert call("genus", "-20", "7")[1] == "4\n"


def test_genus_non_primitive():
    code, out, err = call("genus", "6", "2")
    assert code == 2 and out == ""
    assert "non-primitive slope" in err


def test_genus_not_vertex():
    code, _, err = call("genus", "4", "5")
    assert code == 2 and "not a vertex" in err


def test_path():
    assert call("path", "10", "3")[1] == "(10,3) -> (4,1) -> (2,1) -> (0,1)\n"


def test_children():
    code, out, _ = call("children", "4", "1", "--bound", "22")
    assert code == 0
    assert out.split() == ["(6,1)", "(10,3)", "(14,3)", "(18,5)", "(22,5)"]


def test_tree_json_and_dot():
    code, out, _ = call("tree", "--bound", "6", "--format", "json")
    doc = json.loads(out)
    assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 5
    code, out, _ = call("tree", "--bound", "2", "--format", "dot")
    assert code == 0 and '"(0,1)" -- "(2,1)"' in out
    assert call("tree", "--bound", "6", "--format", "png")[0] == 2
    assert call("tree", "--bound", "0")[0] == 2


def test_classify_text():
    code, out, _ = call("classify", "4", "3")
    assert code == 0
    assert "TwoCandidates(Seifert_01, Klein_41)" in out
    assert [line.split()[-1] if "minimal" not in line else line.split()[-2]
            for line in out.splitlines() if "total genus" in line] == ["4", "4", "6"]


def test_classify_json():
    code, out, _ = call("classify", "5", "-3", "--json")
    doc = json.loads(out)
    assert doc["verdict"] == {"kind": "UniqueIncompressible", "surfaces": ["Klein_4m1"]}
    assert [s["total_genus"] for s in doc["surfaces"]] == [5, 7, 3]


def test_classify_invalid():
    code, _, err = call("classify", "2", "1")
    assert code == 2 and "invalid filling" in err


def test_convert():
    assert call("convert", "4", "3", "4", "-1")[1] == "(20,-7)\n"
    assert call("convert", "4", "3", "0", "1")[1] == "(8,-3)\n"


def test_verify():
    code, out, _ = call("verify", "--bound", "40")
    assert code == 0
    assert len(out.splitlines()) == 4
    code, out, _ = call("verify", "--bound", "40", "--json")
    doc = json.loads(out)
    assert all(r["violations"] == [] for r in doc.values())


def test_usage_error():
    assert call("genus")[0] == 2
    assert call()[0] == 2


def test_deterministic():
    assert call("tree", "--bound", "30", "--format", "dot") == call("tree", "--bound", "30", "--format", "dot")
