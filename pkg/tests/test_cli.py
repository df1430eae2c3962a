import json

import pytest

from splitchroma.cli import main
from splitchroma.fileio import parse_dimacs, write_dimacs

from conftest import C4, G1, STAR, SUN3


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.col"):
        path = tmp_path / name
        path.write_text(write_dimacs(g))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_g1(capsys, graph_file):
    code, out, _ = run(capsys, "classify", graph_file(G1), "--json")
    body = json.loads(out)
    assert code == 0 and body["schema"] == 1
    assert body["classification"]["verdict"] == "class2"
    assert body["classification"]["branch"] == "B0"
    assert body["classification"]["witness"] == 1
    assert body["input"]["digest"].startswith("sha256:")


def test_color_then_verify(capsys, graph_file, tmp_path):
    path = graph_file(STAR)
    code, out, _ = run(capsys, "color", path, "--json", "--oracle")
    body = json.loads(out)
    assert code == 0
    assert body["coloring"]["k"] == 3 and len(body["coloring"]["edges"]) == 3
    assert body["oracle"]["agrees"]
    report = tmp_path / "report.json"
    report.write_text(out)
    code, out, _ = run(capsys, "verify", path, str(report))
    assert code == 0 and out.startswith("ok")


def test_verify_catches_tampering(capsys, graph_file, tmp_path):
    path = graph_file(STAR)
    _, out, _ = run(capsys, "color", path, "--json")
    body = json.loads(out)
    body["coloring"]["edges"][0][2] = body["coloring"]["edges"][1][2]
    report = tmp_path / "bad.json"
    report.write_text(json.dumps(body))
    code, out, _ = run(capsys, "verify", path, str(report), "--json")
    assert code == 1 and json.loads(out)["verify"]["violation"]["kind"] == "improper"


def test_rejections_exit_one(capsys, graph_file):
    code, out, _ = run(capsys, "recognize", graph_file(SUN3), "--json")
    assert code == 1 and json.loads(out)["recognition"]["reason"] == "no-ordering"
    code, out, _ = run(capsys, "classify", graph_file(C4))
    assert code == 1 and "not-split" in out


def test_input_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2 and "line 1" in err and "declares 5 edges" in err
    code, _, err = run(capsys, "classify", str(tmp_path / "missing.col"))
    assert code == 2
    empty = tmp_path / "empty.col"
    empty.write_text("p edge 3 0\n")
    assert run(capsys, "color", str(empty))[0] == 2


def test_edgelist_format(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0 1\n0 2\n0 3\n")
    code, out, _ = run(capsys, "oracle", str(path), "--format", "edgelist", "--json")
    assert code == 0 and json.loads(out)["oracle"]["chi_prime"] == 3


def test_gen_is_deterministic_and_parses(capsys):
    code, first, _ = run(capsys, "gen", "--seed", "4", "--target-branch", "B5", "--max-n", "24")
    _, second, _ = run(capsys, "gen", "--seed", "4", "--target-branch", "B5", "--max-n", "24")
    assert code == 0 and first == second
    g = parse_dimacs(first).graph
    assert g.n <= 24
    _, out, _ = run(capsys, "gen", "--seed", "4", "--target-branch", "B5", "--max-n", "24", "--json")
    assert json.loads(out)["classification"]["branch"] == "B5"


def test_enumerate_and_conformance(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-n", "5", "--json")
    assert code == 0 and json.loads(out)["counts"] == {"2": 1, "3": 2, "4": 5, "5": 12}
    code, out, _ = run(capsys, "conformance", "--max-n", "6", "--json")
    body = json.loads(out)
    assert code == 0 and body["graphs"] == 53 and body["mismatches"] == []


def test_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(write_dimacs(G1)))
    code, out, _ = run(capsys, "classify", "-")
    assert code == 0 and out.startswith("class2")
