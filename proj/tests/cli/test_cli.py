import json
import os
import subprocess

import pytest

QND = os.environ.get("QND", "qnd")


def run(*args, cwd=None):
    return subprocess.run([QND, *map(str, args)], capture_output=True, text=True, cwd=cwd)


def gen(tmp_path, name, *args):
    path = tmp_path / f"{name}.qnd"
    r = run("gen", *args, "-o", path)
    assert r.returncode == 0, r.stderr
    return path


def classify(path):
    r = run("classify", path, "--format", "json")
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


def table_lines(text):
    lines = [l for l in text.splitlines() if l.strip() and not l.startswith("#")]
    return int(lines[0]), lines[1:]


def test_gen_dihedral_to_stdout():
    r = run("gen", "dihedral", 4)
    assert r.returncode == 0
    n, rows = table_lines(r.stdout)
    assert n == 4
    assert rows == ["1 4 3 2", "3 2 1 4", "1 4 3 2", "3 2 1 4"]


def test_gen_union(tmp_path):
    n, rows = table_lines(gen(tmp_path, "u", "union", "dihedral:4", "dihedral:4").read_text())
    assert n == 8 and len(rows) == 8


def test_gen_builtin_example(tmp_path):
    n, _ = table_lines(gen(tmp_path, "e", "builtin", "paper-example-16").read_text())
    assert n == 16


def test_classify_trivial(tmp_path):
    r = classify(gen(tmp_path, "t", "trivial", 3))
    assert r["reductive_degree"] == 1
    assert r["orbit_sizes"] == [1, 1, 1]
    assert r["medial"] is True


def test_classify_example(tmp_path):
    r = classify(gen(tmp_path, "e", "builtin", "paper-example-16"))
    assert r["orbit_sizes"] == [8, 4, 4]
    assert r["tos_degree"] == 3
    assert r["locally_reductive_degree"] == 2
    assert r["reductive_degree"] == 4
    assert r["ncs"] is True


def test_classify_dihedral_eight(tmp_path):
    r = classify(gen(tmp_path, "d8", "dihedral", 8))
    assert r["reductive_degree"] == r["locally_reductive_degree"] == r["tos_degree"] == 3


def test_classify_text(tmp_path):
    r = run("classify", gen(tmp_path, "d3", "dihedral", 3))
    assert r.returncode == 0
    assert "connected" in r.stdout


def test_tree_d4(tmp_path):
    r = run("tree", gen(tmp_path, "d4", "dihedral", 4))
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert len(lines) == 7
    assert lines[0].startswith("{1,2,3,4}")


def test_tree_t1_and_conj_s3(tmp_path):
    r = run("tree", gen(tmp_path, "t1", "trivial", 1))
    assert r.stdout.splitlines() == ["{1} (1)"]
    r = run("tree", gen(tmp_path, "s3", "conj", "s3"), "--dot")
    assert r.returncode == 0
    assert r.stdout.startswith("digraph orbit_tree {")
    assert "{2,4,5}" in r.stdout


def test_verify_exhaustive():
    r = run("verify", "--max-order", 5, "--exhaustive")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "FAIL" not in r.stdout


def test_verify_default():
    r = run("verify")
    assert r.returncode == 0, r.stdout + r.stderr


def test_corrupted_table(tmp_path):
    path = tmp_path / "bad.qnd"
    path.write_text("3\n1 3 2\n3 2 1\n2 3 3\n")
    r = run("classify", path)
    assert r.returncode == 2
    assert "axiom" in r.stderr


def test_parse_error(tmp_path):
    path = tmp_path / "bad.qnd"
    path.write_text("2\n1 x\n2 2\n")
    r = run("classify", path)
    assert r.returncode == 2
    assert "line 2" in r.stderr


@pytest.mark.parametrize("args", [[], ["gen", "nope", 3], ["gen", "builtin", "no-such"],
                                  ["classify"], ["gen", "affine", 4, 2]])
def test_usage_errors(args):
    assert run(*args).returncode == 1


def test_cap_exceeded(tmp_path):
    r = run("classify", gen(tmp_path, "s3", "conj", "s3"), "--cap-group", 2)
    assert r.returncode == 3


def test_list():
    r = run("list")
    assert r.returncode == 0
    assert "paper-example-16" in r.stdout and "q8-group" in r.stdout
