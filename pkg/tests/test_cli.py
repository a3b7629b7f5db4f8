import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from chiralscope import cli

A5_PAIR = "degree 5\n(1,2,3,4,5)\n(1,2)(3,4)\npair\n(1,2,3,4,5)\n(1,2)(3,4)\n"


def schema(name):
    text = resources.files("chiralscope.schemas").joinpath(name).read_text()
    return json.loads(text)


REPORT = schema("report.schema.json")
INCIDENCE = schema("incidence.schema.json")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, err = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT)
    return code, doc


@pytest.fixture
def a5_file(tmp_path):
    path = tmp_path / "a5.pair"
    path.write_text(A5_PAIR)
    return str(path)


def test_verify_reflexible_exits_3(capsys, a5_file):
    code, doc = report(capsys, "verify", a5_file)
    assert code == 3
    assert doc["results"]["verdict"]["reflexible"] is True


def test_verify_m23_exits_0(capsys):
    code, doc = report(capsys, "verify", "pair:M23")
    assert code == 0
    assert doc["results"]["verdict"]["schlafli_type"] == [11, 15]


def test_verify_m23_from_file(capsys, tmp_path):
    from chiralscope import corpus
    pair = corpus.known_pair_m23()
    ambient = corpus.NamedGroup("M23", 23, [pair.x, pair.t])
    path = tmp_path / "m23.pair"
    path.write_text(corpus.format_pair_file(ambient, pair))
    code, doc = report(capsys, "verify", str(path))
    assert code == 0 and doc["results"]["group_order"] == 10200960


def test_verify_malformed_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.pair"
    bad.write_text("degree 5\n(1,2,x)\n")
    code, out, err = run(capsys, "verify", str(bad))
    assert code == 2 and out == "" and "line 2" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "verify", "/nonexistent/pair.txt")
    assert code == 2 and "error" in err


def test_count(capsys):
    code, doc = report(capsys, "count", "M11")
    assert code == 0
    assert doc["results"]["polyhedra_count"] == 66
    code, doc = report(capsys, "count", "psl2:11")
    assert doc["results"]["polyhedra_count"] == 0


def test_count_file_needs_out_order(capsys, tmp_path):
    path = tmp_path / "a5.group"
    path.write_text("degree 5\n(1,2,3,4,5)\n(1,2)(3,4)\n")
    code, _, err = run(capsys, "count", str(path))
    assert code == 2 and "--out-order" in err
    code, doc = report(capsys, "count", str(path), "--out-order", "2")
    assert code == 0 and doc["results"]["polyhedra_count"] == 0


def test_count_capacity_error(capsys, monkeypatch):
    monkeypatch.setenv("CHIRALSCOPE_LIMIT", "1000")
    code, _, err = run(capsys, "count", "M11")
    assert code == 2 and "limit" in err.lower()


def test_big_integers_are_strings(capsys):
    code, doc = report(capsys, "bounds", "--families", "E8", "--q-max", "4", "--json")
    r = doc["results"]["reports"][0]
    assert r["i2_lower"] == str(2**127)
    assert r["d"] == 1


def test_bounds_text_summary(capsys):
    code, out, _ = run(capsys, "bounds", "--families", "2B2", "--q-max", "32")
    assert code == 0
    assert out.splitlines()[-1] == "untagged-failures: 0"


def test_bounds_exit_code_tracks_untagged_failures(capsys):
    code, out, _ = run(capsys, "bounds", "--families", "L", "--q-max", "4", "--rank-max", "5")
    untagged = int(out.splitlines()[-1].split(":")[1])
    assert untagged == 1 and "untagged failure: L5+(4)" in out
    assert code == 3


def test_bounds_unknown_family(capsys):
    code, _, err = run(capsys, "bounds", "--families", "Q8")
    assert code == 2 and "unknown family" in err


def test_bounds_sporadic(capsys):
    code, doc = report(capsys, "bounds", "--families", "2B2", "--q-max", "8",
                       "--json", "--sporadic")
    ids = [r["id"] for r in doc["results"]["sporadic"]]
    assert ids == ["J4", "Ly", "Fi24'"]


def test_build_summary(capsys, a5_file):
    code, doc = report(capsys, "build", a5_file, "--checks")
    res = doc["results"]
    assert code == 0
    assert res["face_counts"] == [20, 30, 12] and res["flag_count"] == 120
    assert res["diamond"] and res["strongly_connected"] and res["flag_orbits"] == 2
    assert res["schlafli_type"] == [5, 3]


def test_build_export_dot_to_stdout(capsys, a5_file):
    code, out, _ = run(capsys, "build", a5_file, "--export", "flag-graph-dot")
    assert code == 0 and out.startswith("graph flags {")
    assert out.count(" -- ") == 180


def test_build_export_json_validates(capsys, a5_file, tmp_path):
    target = tmp_path / "a5.json"
    code, doc = report(capsys, "build", a5_file, "--export", "incidence-json",
                       "--export-to", str(target))
    assert code == 0 and doc["results"]["export"]["path"] == str(target)
    jsonschema.validate(json.loads(target.read_text()), INCIDENCE)


def test_build_non_generating_pair(capsys, tmp_path):
    path = tmp_path / "bad.pair"
    path.write_text("degree 5\n(1,2,3,4,5)\n(1,2)(3,4)\npair\n(1,2,3)\n(1,2)(4,5)\n")
    code, _, err = run(capsys, "build", str(path))
    assert code == 2 and "generate" in err


def test_search(capsys):
    code, doc = report(capsys, "search", "M12", "--trials", "10000", "--seed", "1")
    assert code == 0 and doc["results"]["verdict"]["chiral"]
    code, doc = report(capsys, "search", "A7", "--trials", "500", "--seed", "1")
    assert code == 3 and doc["results"]["found"] is None


def test_corpus(capsys):
    code, doc = report(capsys, "corpus")
    names = [g["name"] for g in doc["results"]["groups"]]
    assert "M11" in names and "pair:M24" in doc["results"]["pairs"]
    code, out, _ = run(capsys, "corpus", "--show", "A5")
    assert "degree 5" in out


def test_human_output(capsys):
    code, out, _ = run(capsys, "count", "M11", "--human")
    assert "chiral polyhedra: 66" in out


def test_timing_only_on_request(capsys):
    _, doc = report(capsys, "count", "A5")
    assert "timing" not in doc
    _, doc = report(capsys, "count", "A5", "--timing")
    assert doc["timing"]["seconds"] >= 0


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "chiralscope.cli", "search", "M11", "--trials", "50",
            "--seed", "7"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.stdout == second.stdout and first.stdout


def test_console_script_exit_code(tmp_path):
    path = tmp_path / "a5.pair"
    path.write_text(A5_PAIR)
    proc = subprocess.run(["chiralscope", "verify", str(path), "--human"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and "chiral: False" in proc.stdout


@pytest.mark.parametrize("k", [8, 11])
def test_verify_alternating_builtin(capsys, k):
    code, doc = report(capsys, "verify", f"pair:A{k}")
    assert code == 0 and doc["results"]["group"] == f"A{k}"


def test_verify_unknown_builtin(capsys):
    code, _, err = run(capsys, "verify", "pair:Q5")
    assert code == 2 and "no pair file" in err
