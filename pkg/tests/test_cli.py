import pytest

from sqtree.cli import main
from sqtree.graph import path_graph, square
from sqtree.io import write_edge_list

EXAMPLE_TEXT = "# six-vertex double star\n6 5\n1 3\n2 3\n3 4\n4 5\n4 6\n"


@pytest.fixture
def example36(tmp_path):
    p = tmp_path / "example36.edges"
    p.write_text(EXAMPLE_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_example(capsys, example36):
    code, out, _ = run(capsys, "classify", example36)
    assert code == 0
    assert out.splitlines()[0] == "DoubleBroom(2,2,2); linear resolution of I(T^2): NO"
    assert out.splitlines()[1].startswith("reason: ")


def test_square_edge_list_and_dot(capsys, example36):
    code, out, _ = run(capsys, "square", example36)
    assert code == 0
    assert out.splitlines()[0] == "6 11"
    code, out, _ = run(capsys, "square", "--dot", example36)
    assert out.startswith("graph G {") and out.count(" -- ") == 11


def test_invariants_of_path_square(capsys, tmp_path):
    p = tmp_path / "l9sq.edges"
    write_edge_list(square(path_graph(9)), p)
    code, out, _ = run(capsys, "invariants", str(p))
    header, row = out.splitlines()
    fields = dict(zip(header.split(","), row.split(",")))
    assert code == 0
    assert (fields["dim"], fields["reg"], fields["pd"]) == ("3", "2", "7")
    assert "pd:theorem" in fields["provenance"]
    code, out, _ = run(capsys, "invariants", "--oracle", str(p))
    fields = dict(zip(header.split(","), out.splitlines()[1].split(",")))
    assert (fields["reg"], fields["pd"]) == ("2", "7")
    assert "pd:oracle" in fields["provenance"]


def test_invariants_of_non_chordal_uses_oracle(capsys, tmp_path):
    p = tmp_path / "c4.edges"
    p.write_text("4 4\n1 2\n2 3\n3 4\n1 4\n")
    code, out, _ = run(capsys, "invariants", str(p))
    assert code == 0
    assert out.splitlines()[1].startswith("4,4,2,1,3,1,")


def test_betti_methods(capsys, example36, tmp_path):
    code, out, _ = run(capsys, "betti", example36, "--method", "lq")
    assert code == 0
    assert "u_1 = (1,3); set = {}; r = 0" in out
    assert "projdim(I) = 2; projdim(S/I) = 3" in out
    sq = tmp_path / "sq.edges"
    write_edge_list(square(path_graph(6)), sq)
    code, out, _ = run(capsys, "betti", str(sq), "--method", "lq")
    assert code == 0 and out.startswith("no linear quotients")
    code, out, _ = run(capsys, "betti", example36)
    assert out.splitlines()[-1] == "total 1 5 6 2"


def test_recognize_square(capsys, tmp_path):
    p = tmp_path / "sq.edges"
    write_edge_list(square(path_graph(6)), p)
    code, out, _ = run(capsys, "recognize-square", str(p))
    assert code == 0
    assert out.splitlines()[-1] == "square of a non-star tree: YES"
    assert len(out.splitlines()) == 6


def test_enumerate_writes_files(capsys, tmp_path):
    out_dir = tmp_path / "trees"
    code, out, _ = run(capsys, "enumerate", "6", "--out", str(out_dir))
    files = sorted(out_dir.iterdir())
    assert code == 0 and len(files) == 6
    assert files[0].read_text().startswith("# ")


def test_scan_six_csv(capsys, tmp_path):
    code, out, err = run(capsys, "scan", "6")
    lines = out.splitlines()
    header = lines[0].split(",")
    col = header.index("reg_increases")
    increases = [line for line in lines[1:] if line.split(",")[col] == "1"]
    assert code == 0
    assert len(increases) == 1
    assert "within scanned range: 1" in err
    csv = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "6", "--out", str(csv))
    assert csv.read_text().splitlines() == lines


def test_scan_is_deterministic(capsys):
    _, first, _ = run(capsys, "scan", "7")
    _, second, _ = run(capsys, "scan", "7")
    assert first == second


@pytest.mark.parametrize("text", ["3 1\n1 5\n", "3 2\n1 2\n", "3 1\n2 2\n"])
def test_parse_errors_exit_two(capsys, tmp_path, text):
    p = tmp_path / "bad.edges"
    p.write_text(text)
    code, _, err = run(capsys, "square", str(p))
    assert code == 2
    assert err.startswith("error: line ")


def test_missing_file_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.edges"))
    assert code == 2


def test_non_tree_classify_exits_two(capsys, tmp_path):
    p = tmp_path / "c4.edges"
    p.write_text("4 4\n1 2\n2 3\n3 4\n1 4\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 2 and "not a tree" in err


def test_caps_exit_three(capsys, tmp_path):
    code, _, err = run(capsys, "scan", "12")
    assert code == 3 and "12" in err
    code, _, _ = run(capsys, "enumerate", "13", "--out", str(tmp_path))
    assert code == 3
    p = tmp_path / "big.edges"
    write_edge_list(path_graph(14), p)
    code, _, err = run(capsys, "betti", str(p))
    assert code == 3 and "14" in err


def test_verify_paper_runs_every_criterion(capsys):
    code, out, _ = run(capsys, "verify-paper")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 10
    assert all(line.startswith("[PASS] ") for line in lines)


def test_verify_paper_failure_exit_code(capsys, monkeypatch):
    from sqtree import acceptance

    monkeypatch.setattr(acceptance, "CRITERIA", [("always fails", lambda: (False, "forced"))])
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1
    assert out == "[FAIL] always fails: forced\n"
