import importlib.util
import json
import subprocess
import sys

import networkx as nx
import pytest

from conftest import FIXTURES
from tr2dom.cli import main
from tr2dom.families import complete, f_rn, figure1_graph, h_s, path, random_graph
from tr2dom.graph_core import canonical_form
from tr2dom.io import ParseError, emit, emit_edgelist, emit_graph6, parse_edgelist, parse_graph, parse_graph6, read_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name: str) -> str:
    return str(FIXTURES / name)


# -- io ---------------------------------------------------------------------


@pytest.mark.parametrize("seed", range(15))
def test_round_trips(seed):
    g = random_graph(1 + seed % 12, 0.4, seed)
    assert parse_graph6(emit_graph6(g)) == g
    assert parse_edgelist(emit_edgelist(g)) == g
    assert parse_graph(emit(g, "graph6")) == g
    assert parse_graph(emit(g, "edgelist")) == g


def test_graph6_matches_networkx():
    g = figure1_graph()
    h = nx.from_graph6_bytes(emit_graph6(g).encode())
    assert sorted(h.edges()) == list(g.edges())
    assert parse_graph6(">>graph6<<" + emit_graph6(g)) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3",
        "3 1\n0 3\n",
        "3 1\n1 1\n",
        "3 2\n0 1\n1 0\n",
        "3 2\n0 1\n",
        "3 1\n0 x\n",
        "3 1\n0 1 2\n",
    ],
)
def test_edgelist_errors(text):
    with pytest.raises(ParseError):
        parse_edgelist(text)


def test_graph6_errors():
    with pytest.raises(ParseError):
        parse_graph6("\x01bad")


def test_read_graph_comments(tmp_path):
    p = tmp_path / "g.el"
    p.write_text("# a triangle\n3 3\n0 1  # first\n1 2\n0 2\n")
    assert read_graph(p) == complete(3)
    with pytest.raises(ParseError, match="cannot read"):
        read_graph(tmp_path / "missing.el")


def test_fixtures_match_generator():
    spec = importlib.util.spec_from_file_location("regenerate", FIXTURES / "regenerate.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    for name in mod.FIXTURES:
        assert (FIXTURES / name).read_text() == mod.render(name)


# -- cli --------------------------------------------------------------------


def test_compute_figure1(capsys):
    code, out, _ = run(capsys, "compute", "-i", fx("figure1_spider.el"), "--param", "all")
    assert code == 0
    rep = json.loads(out)
    vals = {k: v["value"] for k, v in rep["results"].items()}
    assert vals == {"gamma": 3, "gamma-t": 4, "gamma-r2": 5, "gamma-tr": 7, "gamma-tr2": 6, "gamma-x2": 8}
    assert rep["input"]["n"] == 9 and rep["tool"] == "tr2dom"
    assert set(rep["timing"]) == {"seconds", "nodes_explored", "threads"}


def test_compute_near_kind(capsys):
    code, out, _ = run(capsys, "compute", "-f", "path:3", "-p", "gamma-tr2-near", "--vertex", "0", "--no-timing")
    assert code == 0
    rep = json.loads(out)
    assert rep["results"]["gamma-tr2-near"] == {"feasible": True, "value": 2, "vertex": 0, "witness": "011"}
    assert "timing" not in rep


def test_compute_infeasible_exit_3(capsys):
    code, out, err = run(capsys, "compute", "-i", fx("with_isolated.el"), "-p", "gamma,gamma-tr2")
    assert code == 3 and "isolated" in err
    rep = json.loads(out)
    assert rep["results"]["gamma-tr2"]["feasible"] is False
    assert rep["results"]["gamma"]["feasible"] is True


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "compute", "-f", "frn:3,8")[0] == 2
    assert run(capsys, "compute", "-i", str(tmp_path / "nope.el"))[0] == 2
    assert run(capsys, "compute")[0] == 2
    assert run(capsys, "compute", "-f", "path:3", "-p", "gamma-q")[0] == 2
    assert run(capsys, "verify", "-f", "path:3", "-c", "nope")[0] == 2
    assert run(capsys, "generate")[0] == 2
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\n0 7\n")
    assert run(capsys, "compute", "-i", str(bad))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--threads", "0", "-f", "path:3"])
    assert exc.value.code == 2


def test_size_limit_exit_4(capsys):
    assert run(capsys, "compute", "-f", "path:40", "-p", "gamma")[0] == 4
    assert run(capsys, "tree-family", "--max-n", "15")[0] == 4
    assert run(capsys, "tree-family", "--max-n", "13", "--check-completeness")[0] == 4


def test_generate_families(capsys):
    code, out, _ = run(capsys, "generate", "-f", "hs:3")
    assert code == 0 and parse_graph6(out.strip()) == h_s(3)
    code, out, _ = run(capsys, "generate", "-f", "frn:5,8", "--format", "edgelist")
    g = parse_edgelist(out)
    assert g == f_rn(5, 8)
    code, out, _ = run(capsys, "compute", "-f", "frn:5,8", "-p", "gamma-tr2", "--no-timing")
    assert json.loads(out)["results"]["gamma-tr2"]["value"] == 5
    code, out, _ = run(capsys, "generate", "-f", "reduction", "-i", fx("k2.el"))
    assert parse_graph6(out.strip()).n == 12
    code, out, _ = run(capsys, "generate", "--random", "7", "--p", "0.5", "--seed", "3")
    assert parse_graph6(out.strip()) == random_graph(7, 0.5, 3)


def test_verify_reduction_on_k2(capsys):
    code, out, _ = run(capsys, "verify", "-i", fx("k2.el"), "--check", "reduction-id")
    assert code == 0
    v = json.loads(out)["results"]["verdicts"][0]
    assert v["status"] == "holds" and v["lhs"] == v["rhs"] == 7


def test_verify_all_catalog(capsys):
    code, out, _ = run(capsys, "verify", "-i", fx("c5.el"))
    rep = json.loads(out)
    assert code == 0 and len(rep["results"]["verdicts"]) == 16
    assert rep["results"]["summary"]["violated"] == 0


def test_verify_violation_exit_1(capsys, monkeypatch):
    import dataclasses

    import tr2dom.theorem_suite as ts

    real = ts.exact

    def inflated(g, kind, *a, **kw):
        res = real(g, kind, *a, **kw)
        return dataclasses.replace(res, value=res.value + (kind.cli_name == "gamma-tr2"))

    monkeypatch.setattr(ts, "exact", inflated)
    code, out, _ = run(capsys, "verify", "-f", "complete:3", "-c", "eq2")
    assert code == 1


def test_tree_family_command(capsys, tmp_path):
    out_file = tmp_path / "f.json"
    code, _, _ = run(capsys, "tree-family", "--max-n", "6", "--check-completeness", "--certificates", "-o", str(out_file))
    assert code == 0
    rep = json.loads(out_file.read_text())
    res = rep["results"]
    assert res["completeness"]["agree"] and res["count"] == len(res["members"])
    assert res["members"][0]["form"] == canonical_form(path(2)).decode()
    assert all("certificate" in m for m in res["members"])


def test_reports_identical_across_threads(capsys):
    outs = []
    for threads in ("1", "8"):
        code, out, _ = run(capsys, "compute", "-i", fx("figure1_spider.el"), "-p", "all", "--threads", threads, "--no-timing")
        outs.append(out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tr2dom", "compute", "-i", fx("c5.el"), "-p", "gamma-tr2", "--no-timing"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["gamma-tr2"]["value"] == 4
