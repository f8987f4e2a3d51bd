import json
import os
import subprocess

import pytest

CLI = os.environ.get("POWERGRAPH_CLI", "powergraph")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def lines(*args):
    out = run(*args)
    assert out.returncode == 0, out.stderr
    return out.stdout.splitlines()


def edge_set(spec_lines):
    return {tuple(sorted(line.split(","))) for line in spec_lines}


def test_build_edge_counts():
    assert len(lines("build", "C2xC2")) == 3
    assert len(lines("build", "C6")) == 13
    assert lines("build", "C1", "--format", "json") == ['{"vertices":["0"],"edges":[]}']


def test_products_of_k2():
    assert len(lines("product", "normal", "C2", "C2")) == 6
    assert len(lines("product", "direct", "C2", "C2")) == 2
    assert len(lines("product", "cartesian", "C2", "C2")) == 4


def test_generalized_product_matches_power_graph():
    gen = run("product", "generalized", "C2", "C3", "--format", "json")
    pow_ = run("build", "C2xC3", "--format", "json")
    assert json.loads(gen.stdout) == json.loads(pow_.stdout)


def test_dot_output():
    text = run("build", "C2", "--format", "dot").stdout
    assert text.startswith("graph {")
    assert '"0" -- "1";' in text


def test_verify_theorem():
    out = run("verify-theorem", "C2", "C3")
    assert out.returncode == 0
    assert "result: PASS" in out.stdout


def test_verify_all_is_deterministic():
    a = run("verify-all", "--max-order", "16", "--seed", "7")
    b = run("verify-all", "--max-order", "16", "--seed", "7")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert "result: PASS" in a.stdout


def write_graph(path, vertices, edges):
    path.write_text(json.dumps({"vertices": vertices, "edges": edges}))
    return str(path)


def test_iso(tmp_path):
    k4 = write_graph(tmp_path / "k4.json", list("abcd"),
                     [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])
    star = write_graph(tmp_path / "star.json", list("abcd"), [[0, 1], [0, 2], [0, 3]])
    moved = write_graph(tmp_path / "moved.json", list("wxyz"), [[3, 0], [3, 1], [3, 2]])
    assert run("iso", k4, star).returncode == 1
    assert run("iso", star, moved).returncode == 0

    v4 = tmp_path / "v4.json"
    c4 = tmp_path / "c4.json"
    v4.write_text(run("build", "C2xC2", "--format", "json").stdout)
    c4.write_text(run("build", "C4", "--format", "json").stdout)
    assert run("iso", str(v4), str(c4)).returncode == 1


def test_iso_rejects_malformed_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("iso", str(bad), str(bad)).returncode == 2


@pytest.mark.parametrize("spec", ["Z6", "C2x", "S6", "C0", "cayley:/nonexistent"])
def test_bad_group_spec(spec):
    out = run("build", spec)
    assert out.returncode == 2
    assert out.stderr


def test_stats():
    out = lines("stats", "Q8")
    assert "power graph edges: 16" in out
