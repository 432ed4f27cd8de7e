import csv
import io
import json

import pytest

from treespectra import graph6
from treespectra.cli import main
from treespectra.poly import caterpillar_poly
from treespectra.trees import caterpillar_T


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_charpoly(capsys):
    code, out, _ = run(capsys, "--star", "4", "charpoly")
    assert code == 0 and out.splitlines()[0] == "x^4 - 3*x^2"
    code, out, _ = run(capsys, "--cat-c", "2", "3", "3", "--format", "json", "charpoly")
    data = json.loads(out)
    assert json.loads(data["charpoly"]) == [str(c) for c in caterpillar_poly(2, 3, 3).coeffs]
    assert len(json.loads(data["charpoly"])) == 10


def test_tree_options_after_subcommand(capsys):
    code, out, _ = run(capsys, "charpoly", "--path", "3")
    assert code == 0 and out.startswith("x^3 - 2*x")


def test_input_errors(capsys):
    assert run(capsys, "--path", "0", "charpoly")[0] == 2
    assert run(capsys, "--graph6", "C~", "charpoly")[0] == 2
    assert run(capsys, "--graph6", "??", "charpoly")[0] == 2
    assert run(capsys, "charpoly")[0] == 2
    assert run(capsys, "--path", "3", "--star", "3", "charpoly")[0] == 2
    assert run(capsys, "--cat-t", "1,x", "charpoly")[0] == 2
    assert run(capsys, "--path", "3", "lambda", "5")[0] == 2
    assert run(capsys, "maximize", "6", "6")[0] == 2
    assert run(capsys, "conjecture66", "--n", "10", "--d", "6")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_resource_bound(capsys):
    assert run(capsys, "maximize", "30", "5")[0] == 3
    assert run(capsys, "enumerate", "25")[0] == 3


def test_spectrum_and_lambda(capsys):
    code, out, _ = run(capsys, "--path", "4", "spectrum")
    assert out.splitlines()[0] == "lambda_1 = 1.6180339887"
    code, out, _ = run(capsys, "--star", "5", "--format", "json", "--decimals", "4", "lambda", "1")
    v = json.loads(out)["value"]
    assert v["decimal"] == "2.0000" and {"polynomial", "lo", "hi", "multiplicity"} <= set(v)
    code, out, _ = run(capsys, "--path", "3", "--format", "csv", "spectrum")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["k"] for r in rows] == ["1", "2", "3"]


def test_center(capsys):
    code, out, _ = run(capsys, "--path", "4", "center")
    assert code == 0 and out.startswith("spectral edge 1 2")
    code, out, _ = run(capsys, "--cat-t", "3,0,3", "--format", "json", "center")
    data = json.loads(out)
    assert data["kind"] == "vertex" and data["center"] == [2] and data["verified"]


def test_maximize(capsys):
    code, out, _ = run(capsys, "--format", "json", "maximize", "13", "11", "--verify")
    data = json.loads(out)
    assert code == 0 and len(data["winners"]) == 2 and data["agrees_with_construction"]
    code, out, _ = run(capsys, "maximize", "6", "4", "--verify")
    assert code == 0 and "agree: True" in out
    code, out, _ = run(capsys, "maximize", "11", "6", "--construct")
    assert code == 0 and "i=1 j=5" in out
    code, out, _ = run(capsys, "maximize", "9", "4", "--lambda1", "--verify")
    assert code == 0


def test_minimize(capsys):
    code, out, _ = run(capsys, "--format", "json", "minimize", "8", "4", "--verify")
    data = json.loads(out)
    assert code == 0
    assert data["optimum"]["polynomial"] == ["-1", "1"]
    assert data["checks"]["path_bounds"] and data["checks"]["smith"]


def test_sweep_csv(capsys, tmp_path):
    out_file = tmp_path / "max.csv"
    code, _, _ = run(capsys, "--format", "csv", "sweep", "--n-max", "10", "--objective", "max",
                     "--out", str(out_file))
    assert code == 0
    rows = list(csv.DictReader(out_file.open()))
    assert len(rows) == 21 and all(r["agree"] == "true" for r in rows)
    assert list(rows[0]) == ["n", "d", "objective", "optimum_decimal", "winners", "search_size", "agree"]


def test_sweep_min_and_determinism(capsys):
    a = run(capsys, "--format", "json", "sweep", "--n-max", "8", "--objective", "min")
    b = run(capsys, "--format", "json", "sweep", "--n-max", "8", "--objective", "min", "--jobs", "2")
    assert a[0] == 0 and a[1] == b[1]
    assert json.loads(a[1])["summary"]["all_agree"]


def test_sweep_time_limit(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "12", "--time-limit", "0")
    assert code == 3 and "incomplete" in out


def test_sweep_boundary(capsys):
    code, out, _ = run(capsys, "--format", "json", "sweep", "--boundary-iii", "--d-min", "9", "--d-max", "13")
    rows = json.loads(out)["boundary_iii"]
    assert code == 0 and [r["r2"] for r in rows] == [[1], [1], [1, 2], [2], [2]]


def test_conjecture66(capsys):
    code, out, _ = run(capsys, "conjecture66", "--n", "10", "--d", "5")
    assert code == 0 and "conjecture holds here" in out


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "7", "--diameter", "4")
    lines = out.split()
    assert code == 0 and len(lines) == 5
    f = tmp_path / "t.g6"
    run(capsys, "enumerate", "8", "--out", str(f))
    assert len(list(graph6.read_file(f))) == 23
    code, out, _ = run(capsys, "--file", str(f), "charpoly")
    assert code == 0


def test_graph6_source(capsys):
    s = graph6.encode(caterpillar_T([4, 0, 4]))
    code, out, _ = run(capsys, "--graph6", s, "--decimals", "6", "lambda", "2")
    assert out.startswith("lambda_2 = 2.000000")


def test_timestamp_off_by_default(capsys):
    _, out, _ = run(capsys, "--format", "json", "--path", "3", "charpoly")
    assert "generated" not in json.loads(out)
    _, out, _ = run(capsys, "--format", "json", "--timestamp", "--path", "3", "charpoly")
    assert "generated" in json.loads(out)
