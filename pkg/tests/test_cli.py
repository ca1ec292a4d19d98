import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from paulipascal.cli import main
from paulipascal import render


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pauli_triangle_text(capsys):
    code, out, _ = run(capsys, "triangle", "--mode", "pauli", "--rows", "0..6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    assert lines[-1].strip() == "1 0 3 0 3 0 1"
    assert lines[0].strip() == "1"


def test_negative_row_csv(capsys):
    code, out, _ = run(capsys, "triangle", "--mode", "plain", "--rows", "-3..-3",
                       "--dominant", "1", "--truncation", "3", "--format", "csv")
    assert code == 0
    assert out == "1,-3,6,-10\n"


def test_pyramid_csv(capsys):
    code, out, _ = run(capsys, "pyramid", "--mode", "pauli", "--n", "6", "--format", "csv")
    assert code == 0
    rows = render.rows_from_csv(out)
    assert rows[2][2] == 6
    assert rows[0] == [1, 0, 3, 0, 3, 0, 1]


def test_negative_pyramid(capsys):
    code, out, _ = run(capsys, "pyramid", "--mode", "pauli", "--n", "-3",
                       "--dominant", "1", "--truncation", "6", "--format", "csv")
    assert code == 0
    rows = render.rows_from_csv(out)
    assert rows[4][0] == 3
    assert rows[0][:3] == [1, 1, -2]


def test_sequence_csv(capsys):
    code, out, _ = run(capsys, "sequence", "--kind", "fib-k", "--k", "3", "--range", "1..8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,exact_num,exact_den,closed_form_float,abs_error"
    assert [int(l.split(",")[1]) for l in lines[1:]] == [1, 1, 4, 7, 19, 40, 97, 217]


def test_sequence_negative_range(capsys):
    code, out, _ = run(capsys, "sequence", "--kind", "jacobsthal", "--range", "-6..-1")
    assert code == 0
    first = out.splitlines()[1].split(",")
    assert first[:3] == ["-6", "-21", "64"]


def test_sequence_json(capsys):
    code, out, _ = run(capsys, "sequence", "--kind", "pauli-jacobsthal", "--range", "12", "--format", "json")
    assert code == 0
    (record,) = json.loads(out)
    assert record["exact_num"] == 21 and float(record["closed_form_float"]) == pytest.approx(21.0, abs=1e-9)


@pytest.mark.parametrize("gf,value", [("x^0/(1--1*x)^1", "1/2\n"), ("x^0/(1--2*x)^1", "1/3\n")])
def test_sum(capsys, gf, value):
    code, out, _ = run(capsys, "sum", gf)
    assert code == 0 and out == value


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all")
    assert code == 0
    assert out.count("PASS") == len(out.splitlines()) > 5


@pytest.mark.parametrize("argv", [
    ["verify", "nonsense"],
    ["triangle", "--rows", "-2"],
    ["triangle", "--rows", "3", "--dominant", "1"],
    ["triangle", "--rows", "5..2"],
    ["sequence", "--kind", "fib-k", "--range", "1..3"],
    ["sequence", "--kind", "fib", "--k", "2", "--range", "1..3"],
    ["sequence", "--kind", "fib", "--range", "1..3", "--format", "svg"],
    ["sum", "1/(1-x)"],
    ["pyramid", "--n", "-1", "--dominant", "4", "--truncation", "2"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "triangle", "--rows", "2", "--out", str(tmp_path / "missing" / "x.txt"))
    assert code == 3 and "cannot write" in err


def test_out_file_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["pyramid", "--mode", "pauli", "--n", "-5", "--dominant", "1",
                     "--truncation", "6", "--format", "json", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_csv_round_trip(capsys):
    _, out, _ = run(capsys, "triangle", "--mode", "pauli", "--rows", "-4..-1",
                    "--dominant", "2", "--truncation", "5", "--format", "csv")
    assert render.rows_to_csv(render.rows_from_csv(out)) == out


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "triangle", "--rows", "0..5", "--format", "json")
    assert render.tables_to_json(render.tables_from_json(out)) == out


def test_svg_well_formed(capsys):
    _, out, _ = run(capsys, "triangle", "--mode", "pauli", "--rows", "0..6", "--format", "svg")
    root = ET.fromstring(out)
    texts = [e for e in root.iter() if e.tag.endswith("text")]
    assert len(texts) == sum(n + 1 for n in range(7))
    assert sum(1 for e in texts if e.get("fill")) == 6


def test_text_layout_centres_rows(capsys):
    _, out, _ = run(capsys, "triangle", "--rows", "0..2")
    assert out == "  1\n 1 1\n1 2 1\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "paulipascal", "sum", "x^0/(1--1*x)^2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "1/4\n"
