import csv
import json

import pytest

from rainbowmatch.cli import main
from rainbowmatch.graph import load_instance, min_color_degree


@pytest.fixture
def files(tmp_path):
    c3, c4 = tmp_path / "c3.ecg", tmp_path / "c4.ecg"
    assert main(["gen", "--family", "cayley", "--n", "3", "-o", str(c3)]) == 0
    assert main(["gen", "--family", "cayley", "--n", "4", "-o", str(c4)]) == 0
    return tmp_path, c3, c4


def test_gen_cayley(files):
    _, _, c4 = files
    text = c4.read_text()
    assert text.startswith("# rainbowmatch")
    assert load_instance(text).n == 8


def test_gen_random(tmp_path):
    out = tmp_path / "r.ecg"
    args = ["gen", "--family", "random", "--n", "39", "--k", "3", "--q", "10", "--p", "0.1", "--seed", "7"]
    assert main(args + ["-o", str(out)]) == 0
    g = load_instance(out.read_text())
    assert g.n == 39 and min_color_degree(g) >= 3
    assert "seed=7" in out.read_text().splitlines()[0]


def test_gen_invalid(capsys):
    assert main(["gen", "--family", "cayley", "--n", "0"]) == 2
    assert "error" in capsys.readouterr().err


def test_solve_exact(files, capsys):
    _, c3, c4 = files
    assert main(["solve", str(c4), "--alg", "exact", "--k", "4"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["size"] == 3 and out["succeeded"] is False
    assert set(out) == {"algorithm", "k", "size", "succeeded", "matching", "trace", "stats"}
    assert main(["solve", str(c3), "--alg", "exact", "--k", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["size"] == 3 and len(out["matching"]) == 3


def test_solve_pipeline_with_trace(tmp_path, capsys):
    inst, trace = tmp_path / "r.ecg", tmp_path / "t.json"
    main(["gen", "--family", "random", "--n", "39", "--k", "3", "--q", "10", "--p", "0.1", "--seed", "7", "-o", str(inst)])
    assert main(["solve", str(inst), "--alg", "pipeline", "--k", "3", "--trace", str(trace)]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["succeeded"]
    data = json.loads(trace.read_text())
    assert set(data["structure"]) == {"deletions", "orientation", "partition", "case", "weights"}
    for rec in data["structure"]["deletions"]:
        assert rec["rule"] in ("a", "b") and len(rec["edge"]) == 3
    num, den = data["structure"]["weights"]["w1"]["total"]
    assert [num, den] == data["structure"]["partition"]["case1_mass"]


@pytest.mark.parametrize("alg", ["greedy", "case1", "case2", "case3"])
def test_solve_other_algorithms(files, alg):
    _, c3, _ = files
    assert main(["solve", str(c3), "--alg", alg, "--k", "1"]) in (0, 1, 2)


def test_solve_default_k(files, capsys):
    _, c3, _ = files
    assert main(["solve", str(c3), "--alg", "exact"]) == 0
    assert json.loads(capsys.readouterr().out)["k"] == 3


def test_solve_io_errors(tmp_path):
    bad = tmp_path / "bad.ecg"
    bad.write_text("2 1\n0 0 0\n")
    assert main(["solve", str(bad)]) == 2
    assert main(["solve", str(tmp_path / "missing.ecg")]) == 2


def test_solve_budget(tmp_path):
    inst = tmp_path / "c7.ecg"
    main(["gen", "--family", "cayley", "--n", "8", "-o", str(inst)])
    assert main(["solve", str(inst), "--alg", "exact", "--k", "8", "--budget", "100"]) == 3


def test_verify(files, capsys):
    tmp, c3, _ = files
    good = tmp / "good.txt"
    # diagonal cells of the Z_3 table carry symbols 0, 2, 1
    good.write_text("0 3 0\n1 4 2\n2 5 1\n")
    assert main(["verify", str(c3), str(good)]) == 0
    rep = tmp / "rep.txt"
    rep.write_text("0 3 0\n1 5 0\n")
    assert main(["verify", str(c3), str(rep)]) == 1
    assert "repeated color" in capsys.readouterr().out
    absent = tmp / "absent.txt"
    absent.write_text("0 1 0\n")
    assert main(["verify", str(c3), str(absent)]) == 1
    assert "unknown edge" in capsys.readouterr().out
    junk = tmp / "junk.txt"
    junk.write_text("0 3\n")
    assert main(["verify", str(c3), str(junk)]) == 2


def test_experiment_single_trivial(tmp_path):
    rep = tmp_path / "rep.json"
    assert main(["experiment", "--k", "1", "--trials", "1", "-o", str(rep)]) == 0
    data = json.loads(rep.read_text())
    assert data["schema"] == 1
    assert len(data["rows"]) == 1 and data["rows"][0]["succeeded"]


def test_experiment_csv_and_determinism(tmp_path):
    a, b, c = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "a.csv"
    args = ["experiment", "--k", "2..3", "--trials", "5", "--seed", "42", "--algs", "pipeline,greedy"]
    assert main(args + ["-o", str(a), "--csv", str(c)]) == 0
    assert main(args + ["-o", str(b), "--jobs", "2"]) == 0
    ra, rb = json.loads(a.read_text()), json.loads(b.read_text())
    ra.pop("runtime"), rb.pop("runtime")
    ra["config"].pop("jobs"), rb["config"].pop("jobs")
    assert ra == rb
    with open(c) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 5 * 2 * 2
    assert ra["summary"]["theorem_violations"] == 0


def test_experiment_bad_config():
    assert main(["experiment", "--trials", "0"]) == 2
    assert main(["experiment", "--algs", "nope"]) == 2
