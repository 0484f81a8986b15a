import csv
import io
import json
import os
import subprocess
import sys

import pytest

from redgraph.cli import EXAMPLES, build_parser

CMD = [sys.executable, "-m", "redgraph.cli"]


def run(args, stdin="", env=None):
    full_env = dict(os.environ)
    full_env.pop("REDGRAPH_SEED", None)
    full_env.update(env or {})
    return subprocess.run(CMD + args, input=stdin, capture_output=True, text=True, env=full_env, timeout=300)


@pytest.mark.parametrize("argv, stdin, expected", EXAMPLES, ids=[" ".join(e[0]) for e in EXAMPLES])
def test_help_examples(argv, stdin, expected):
    assert "redgraph " + " ".join(argv) in build_parser().format_help()
    res = run(argv, stdin or "")
    assert res.returncode == 0, res.stderr
    assert res.stdout == expected


def test_help_exits_zero():
    res = run(["--help"])
    assert res.returncode == 0
    assert "examples:" in res.stdout


def test_usage_error_exit_two():
    res = run(["classify", "--bogus"])
    assert res.returncode == 2
    assert "usage:" in res.stderr
    assert run(["nosuchcommand"]).returncode == 2


def test_domain_error_exit_one():
    res = run(["classify"], "Dh\n")
    assert res.returncode == 1
    assert res.stdout == ""
    assert "offset" in res.stderr
    assert run(["transform", "--op", "short", "--vertex", "9"], "Dhc\n").returncode == 1
    assert run(["transform", "--op", "short"], "Dhc\n").returncode == 1
    assert run(["enum", "--n", "9"]).returncode == 1


def test_classify_and_analyze_stream():
    lines = "Dhc\nC~\nCl\nD?{\n"
    res = run(["classify"], lines)
    assert res.stdout.split() == ["WEAK", "STRONG", "STRONG", "NEITHER"]
    res = run(["analyze"], lines)
    reports = [json.loads(x) for x in res.stdout.splitlines()]
    assert [r["graph6"] for r in reports] == ["Dhc", "C~", "Cl", "D?{"]
    assert reports[0]["graph_class"] == "WEAK"
    assert reports[0]["counts"]["redundant"] == 0


def test_jobs_preserve_order(tmp_path):
    from redgraph import enumeration, to_graph6

    graphs = [to_graph6(g) for g in enumeration.generate_all(6)]
    f = tmp_path / "in.g6"
    f.write_text("\n".join(graphs) + "\n")
    one = run(["classify", str(f)])
    two = run(["classify", "--jobs", "2", str(f)])
    assert one.returncode == two.returncode == 0
    assert one.stdout == two.stdout
    assert len(one.stdout.split()) == 156


def test_transform_ops():
    # C5 plus two dominating twins, checked bit by bit
    assert run(["transform", "--op", "dominate", "--k", "2"], "Dhc\n").stdout.strip() == "Fhf~o"
    out = run(["transform", "--op", "tensor", "--other", "Bw"], "Bw\n")
    assert out.returncode == 0 and out.stdout.startswith("H")
    out = run(["transform", "--op", "merge", "--other", "Bw", "--map", "1:0,2:1"], "Bw\n")
    assert out.stdout.strip() == "Cz"  # K4 minus (0, 3)
    for op in ("pshort", "split"):
        assert run(["transform", "--op", op, "--vertex", "0"], "Dhc\n").returncode == 0
    for op in ("strengthen", "spider", "dominate"):
        assert run(["transform", "--op", op], "Dhc\n").returncode == 0


def test_nibble_json():
    res = run(["nibble", "--policy", "FIRST_INDEX", "--audit"], "GDoC~G\n")
    trace = json.loads(res.stdout)
    assert trace["deletions"] == [0]
    assert trace["final_class"] == "WEAK"
    assert trace["steps_isometric"] is True


def test_mesh_command(tmp_path):
    mask = tmp_path / "mask.txt"
    mask.write_text("".join(f"{r} {c}\n" for r in range(6) for c in range(6)))
    res = run(["mesh", "--kind", "sq", "--mask", str(mask), "--query", "1,1", "5,4"])
    assert res.stdout.strip() == "7"
    res = run(["mesh", "--kind", "sq", "--mask", str(mask), "--query", "0,0", "5,4"])
    assert res.returncode == 1 and "BFS" in res.stderr


def test_enum_stats_csv():
    res = run(["enum", "--n", "6", "--connected", "--table", "stats"])
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert rows[-1]["n"] == "6"
    assert rows[-1]["all_redundant"] == "30"
    res = run(["enum", "--n", "6", "--table", "kappa"])
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert [r["kappa_strong"] for r in rows] == ["1", "2", "2", "4", "8", "25"]


def test_gnp_seed_from_environment():
    args = ["gnp", "--n", "30", "--p-from", "0.1", "--p-to", "0.3", "--steps", "3", "--samples", "10"]
    a = run(args, env={"REDGRAPH_SEED": "11"}).stdout
    b = run(args + ["--seed", "11"]).stdout
    c = run(args, env={"REDGRAPH_SEED": "12"}).stdout
    assert a == b != c
    assert a.splitlines()[0].startswith("n,p,samples,connected_samples")


def test_formulas_csv():
    res = run(["formulas", "--n", "1000", "--steps", "5"])
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert len(rows) == 5
    assert float(rows[0]["L"]) == pytest.approx(0.006908, abs=1e-6)
