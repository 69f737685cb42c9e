import json

import pytest

from colornet.cli import main
from colornet.connectivity import is_color_connected
from colornet.constructions import G1
from colornet.graph import new_graph, parse_graph, serialize_graph


@pytest.fixture
def g1_file(tmp_path):
    p = tmp_path / "g1.json"
    p.write_text(serialize_graph(G1))
    return str(p)


@pytest.fixture
def path2_file(tmp_path, path2):
    p = tmp_path / "path2.json"
    p.write_text(serialize_graph(path2))
    return str(p)


@pytest.fixture
def k3_dimacs(tmp_path):
    p = tmp_path / "k3.col"
    p.write_text("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")
    return str(p)


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_bounds_feasible(capsys):
    code, out = run_json(capsys, ["bounds", "-n", "5", "-m", "4", "-t", "2"])
    assert code == 0
    assert out["lambda_min"] == 8 and out["verdict"] == "feasible-by-construction"


def test_bounds_infeasible(capsys):
    assert main(["bounds", "-n", "3", "-m", "2", "-t", "1"]) == 1
    assert "infeasible" in capsys.readouterr().out


def test_bounds_degree_dominates(capsys):
    code, out = run_json(capsys, ["bounds", "-n", "7", "-m", "5", "-t", "2"])
    assert code == 0
    assert (out["degree_bound"], out["mu_bound"], out["lambda_min"]) == (11, 10, 11)
    assert out["verdict"] == "necessary-conditions-met"


def test_bounds_bad_domain(capsys):
    assert main(["bounds", "-n", "1", "-m", "2", "-t", "1"]) == 2
    assert "error" in capsys.readouterr().err


def test_design_glued(capsys, tmp_path):
    out_path = tmp_path / "g.json"
    assert main(["design", "-n", "9", "-m", "4", "-t", "2", "--out", str(out_path)]) == 0
    g = parse_graph(out_path.read_text())
    assert g.num_edges == 16 and is_color_connected(g, 2)
    assert "m4-t2" in capsys.readouterr().out


def test_design_infeasible(capsys):
    assert main(["design", "-n", "5", "-m", "3", "-t", "2"]) == 1


def test_design_hub_graph(capsys):
    code, out = run_json(capsys, ["design", "-n", "5", "-m", "3", "-t", "1"])
    assert code == 0 and out["lambda"] == 6 and out["construction"] == "t1"


def test_design_search_fallback(capsys):
    code, out = run_json(capsys, ["design", "-n", "7", "-m", "5", "-t", "2"])
    assert code == 0 and out["construction"] == "search" and out["lambda"] == 11


def test_design_lambda_below_min(capsys):
    assert main(["design", "-n", "5", "-m", "4", "-t", "2", "--lambda", "7"]) == 1


def test_design_then_check(capsys, tmp_path):
    for n, m, t in [(6, 3, 2), (8, 4, 1), (10, 4, 2), (9, 5, 3)]:
        path = tmp_path / f"d{n}{m}{t}.json"
        assert main(["design", "-n", str(n), "-m", str(m), "-t", str(t), "--out", str(path)]) == 0
        assert main(["check", str(path), "-t", str(t)]) == 0


def test_check_yes(capsys, g1_file):
    assert main(["check", g1_file, "-t", "2"]) == 0
    assert capsys.readouterr().out.startswith("yes")


def test_check_no_prints_separator(capsys, g1_file):
    code, out = run_json(capsys, ["check", g1_file, "-t", "3"])
    assert code == 1 and not out["connected"]
    assert len(out["separator"]["colors"]) == 3


def test_check_bad_t(capsys, g1_file):
    assert main(["check", g1_file, "-t", "9"]) == 2


def test_separator_path2(capsys, path2_file):
    code, out = run_json(capsys, ["separator", path2_file])
    assert code == 0 and out["separator"]["colors"] == [0]


def test_separator_pair(capsys, g1_file):
    code, out = run_json(capsys, ["separator", g1_file, "0", "3"])
    assert code == 0 and out["separator"]["scope"] == [0, 3]
    assert len(out["separator"]["colors"]) == 3


def test_separator_bad_pair(capsys, g1_file):
    assert main(["separator", g1_file, "0"]) == 2
    assert main(["separator", g1_file, "0", "9"]) == 2


def test_reduce_k3(capsys, k3_dimacs, tmp_path):
    out_path = tmp_path / "r.json"
    assert main(["reduce", k3_dimacs, "-t", "2", "--out", str(out_path)]) == 0
    g = parse_graph(out_path.read_text())
    assert (g.n, g.num_edges, g.m) == (5, 6, 3)
    meta = json.loads((tmp_path / "r.meta.json").read_text())
    assert meta == {"a": 0, "b": 1, "t": 2}


def test_reduce_certify(capsys, k3_dimacs):
    code, out = run_json(capsys, ["reduce", k3_dimacs, "-t", "1", "--certify"])
    assert code == 0 and out["certified"] is True


def test_reduce_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 3 2\ne 1 2\n")
    assert main(["reduce", str(bad), "-t", "1"]) == 2


def test_missing_file(capsys, tmp_path):
    assert main(["check", str(tmp_path / "nope.json"), "-t", "1"]) == 2


def test_malformed_graph(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 2, "m": 1, "edges": [[0, 0, 0]]}')
    assert main(["check", str(p), "-t", "0"]) == 2


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "-n", "5"])
    assert exc.value.code == 2


def test_dot_g1(capsys, g1_file):
    assert main(["dot", g1_file]) == 0
    dot = capsys.readouterr().out
    assert dot.count(" -- ") == 8
    assert sum(1 for line in dot.splitlines() if line.strip().rstrip(";").isdigit()) == 5


def test_dot_empty_and_stable(capsys, tmp_path):
    p = tmp_path / "e.json"
    p.write_text(serialize_graph(new_graph(3, 1, [])))
    main(["dot", str(p)])
    first = capsys.readouterr().out
    main(["dot", str(p)])
    assert capsys.readouterr().out == first
    assert " -- " not in first and first.count(";") == 3
