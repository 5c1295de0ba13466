import json

import pytest

from hlag import colex_segment, parse_edge_list, serialize_edge_list
from hlag.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lambda_json(tmp_path, capsys):
    path = tmp_path / "single.edges"
    path.write_text("2 2 1\n1 2\n")
    code, out, _ = run(capsys, "lambda", "--input", str(path), "--format", "json", "--seed", "3")
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == pytest.approx(0.25, abs=1e-12)
    assert data["weights"] == pytest.approx([0.5, 0.5], abs=1e-9)
    assert data["support"] == [1, 2]
    assert data["converged"] is True
    assert data["kkt_residual"] <= 1e-10


def test_lambda_bad_input_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.edges"
    path.write_text("3 4 1\n1 2\n")
    code, _, err = run(capsys, "lambda", "--input", str(path))
    assert code == 2
    assert "line 2" in err


def test_lambda_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "lambda", "--input", "/nonexistent/x.edges")
    assert code == 2


def test_colex_writes_segment(tmp_path, capsys):
    out_path = tmp_path / "C.edges"
    code, _, _ = run(capsys, "colex", "--r", "3", "--m", "4", "--out", str(out_path))
    assert code == 0
    G = parse_edge_list(out_path.read_text())
    assert G == colex_segment(3, 4)
    assert {e.vertices for e in G.edges} == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)}


def test_construct_round_trips_with_header(tmp_path, capsys):
    out_path = tmp_path / "F.edges"
    code, _, _ = run(
        capsys, "construct", "--family", "addresult",
        "--t", "14", "--r", "3", "--a", "11", "--i", "1", "--out", str(out_path),
    )
    assert code == 0
    text = out_path.read_text()
    assert text.startswith("# family=addresult t=14 r=3 a=11 i=1\n")
    G = parse_edge_list(text)
    assert G.m == 353


def test_construct_param_error_exits_2(capsys):
    code, _, err = run(capsys, "construct", "--family", "addresult",
                       "--t", "14", "--r", "3", "--a", "10", "--i", "1")
    assert code == 2
    assert "2i+9" in err


def test_enumerate_count_only(capsys):
    code, out, _ = run(capsys, "enumerate", "--r", "3", "--m", "3", "--nmax", "5", "--count-only")
    assert code == 0
    assert out.strip() == "2"


def test_enumerate_streams_parseable_blocks(capsys):
    code, out, _ = run(capsys, "enumerate", "--r", "3", "--m", "2", "--nmax", "5")
    assert code == 0
    G = parse_edge_list(out)
    assert {e.vertices for e in G.edges} == {(1, 2, 3), (1, 2, 4)}


def test_verify_conjecture_single_m(capsys):
    code, out, _ = run(capsys, "verify", "conjecture", "--r", "3", "--m", "3",
                       "--restarts", "4", "--seed", "5")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "conjecture"
    assert all(c["pass"] for c in data["checks"])


def test_verify_conjecture_sweep_aggregates(capsys):
    code, out, _ = run(capsys, "verify", "conjecture", "--r", "3", "--m-max", "4",
                       "--restarts", "4", "--seed", "5")
    assert code == 0
    data = json.loads(out)
    assert isinstance(data, list) and len(data) == 4


def test_verify_theorem_report_formats(capsys):
    args = ("verify", "theorem", "--name", "talbot-colex-range", "--r", "3", "--t", "5",
            "--restarts", "4", "--seed", "5")
    code, js, _ = run(capsys, *args, "--format", "json")
    assert code == 0
    code, csv_text, _ = run(capsys, *args, "--format", "csv")
    assert code == 0
    data = json.loads(js)
    lines = csv_text.strip().splitlines()
    assert lines[0] == "label,lhs,rhs,margin,tolerance,pass"
    for chk, line in zip(data["checks"], lines[1:]):
        assert repr(chk["lhs"]) == line.split(",")[1]
    code, text, _ = run(capsys, *args, "--format", "text")
    assert code == 0 and "overall: PASS" in text


def test_verify_byte_identical_for_fixed_seed(capsys):
    args = ("verify", "theorem", "--name", "clique-weight-bound", "--t", "5", "--r", "3",
            "--samples", "5", "--restarts", "4", "--seed", "9")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_verify_failure_exits_1(capsys):
    # an absurdly strict tolerance override turns real margins into failures
    code, out, _ = run(capsys, "verify", "theorem", "--name", "talbot-colex-range",
                       "--r", "3", "--t", "5", "--restarts", "4", "--seed", "5",
                       "--tolerance", "1e-300")
    assert code == 1
    data = json.loads(out)
    assert not all(c["pass"] for c in data["checks"])


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "conjecture", "--r", "3"])  # missing --m/--m-max
    assert exc.value.code == 2
