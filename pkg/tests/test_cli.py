"""The command-line interface, driven through main(argv)."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from graphcode import apply_permutation, cycle_graph, path_graph, render_edge_list
from graphcode.cli import BUDGET_ENV_VAR, main

DATA = Path(__file__).parent / "data"
EXAMPLE = str(DATA / "example1.edges")


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def write_graph(tmp_path: Path, name: str, g) -> str:
    path = tmp_path / name
    path.write_text(render_edge_list(g))
    return str(path)


def test_code_human(capsys):
    status, out, _ = run_cli(capsys, "code", EXAMPLE)
    assert status == 0
    assert out.strip() == "(2,2,3,3,5,7,10,10,10,11,231)"


def test_code_json(capsys):
    status, out, _ = run_cli(capsys, "code", "--json", EXAMPLE)
    assert status == 0
    assert json.loads(out) == {"code": [2, 2, 3, 3, 5, 7, 10, 10, 10, 11, 231]}


def test_poly(capsys):
    status, out, _ = run_cli(capsys, "poly", EXAMPLE)
    assert status == 0
    assert out.strip() == "2*x1 + 2*x2 + x3 + x4 + x5 + 3*x1*x3 + x2*x4*x5"


def test_theta(capsys):
    status, out, _ = run_cli(capsys, "theta", EXAMPLE)
    assert status == 0
    assert "theta_t: 5" in out
    assert "minimum coverings: 1" in out


def test_covers(capsys, tmp_path, witness_graph):
    path = write_graph(tmp_path, "w.edges", witness_graph)
    status, out, _ = run_cli(capsys, "covers", "--json", path)
    assert status == 0
    data = json.loads(out)
    assert data["theta_t"] == 3
    assert len(data["coverings"]) == 2
    as_sets = {frozenset(frozenset(c) for c in cov) for cov in data["coverings"]}
    assert frozenset({frozenset({0, 1}), frozenset({0, 2, 3}), frozenset({1, 2, 4})}) in as_sets


def test_iso_positive_with_oracle(capsys, tmp_path):
    g = path_graph(4)
    h = apply_permutation(g, (3, 1, 0, 2))
    p1 = write_graph(tmp_path, "a.edges", g)
    p2 = write_graph(tmp_path, "b.edges", h)
    status, out, _ = run_cli(capsys, "iso", "--oracle", p1, p2)
    assert status == 0
    assert "isomorphic: true" in out
    assert "agrees" in out


def test_iso_negative(capsys, tmp_path):
    p1 = write_graph(tmp_path, "a.edges", path_graph(4))
    p2 = write_graph(tmp_path, "b.edges", cycle_graph(4))
    status, out, _ = run_cli(capsys, "iso", "--json", p1, p2)
    assert status == 0
    data = json.loads(out)
    assert data["isomorphic"] is False
    assert data["code1"] == [2, 3, 10, 15]
    assert data["code2"] == [6, 10, 21, 35]


def test_iso_different_sizes(capsys, tmp_path):
    p1 = write_graph(tmp_path, "a.edges", path_graph(3))
    p2 = write_graph(tmp_path, "b.edges", path_graph(4))
    status, out, _ = run_cli(capsys, "iso", p1, p2)
    assert status == 0
    assert "isomorphic: false" in out
    assert "different vertex count" in out


def test_divisor_pipeline_cross_checks(capsys):
    status, out, _ = run_cli(capsys, "divisor", "60")
    assert status == 0
    assert "theta_t: 3" in out
    assert "F: 2*x1 + x2 + x3 + 2*x1*x2 + 2*x1*x3 + x2*x3 + 2*x1*x2*x3" in out
    assert "closed-form cross-check: ok" in out


def test_divisor_closed_form(capsys):
    status, out, _ = run_cli(capsys, "divisor", "60", "--closed-form")
    assert status == 0
    assert "F (closed form): 2*x1 + x2 + x3 + 2*x1*x2 + 2*x1*x3 + x2*x3 + 2*x1*x2*x3" in out


def test_divisor_json(capsys):
    status, out, _ = run_cli(capsys, "divisor", "--json", "12")
    assert status == 0
    data = json.loads(out)
    assert data["labels"] == [2, 3, 4, 6, 12]
    assert data["theta_t"] == 2
    assert data["closed_form_agrees"] is True


def test_realize_single_vertex(capsys):
    status, out, _ = run_cli(capsys, "realize", "--sequence", "1")
    assert status == 0
    assert out.strip() == "1 0"


def test_realize_path(capsys):
    status, out, _ = run_cli(capsys, "realize", "--json", "--sequence", "2,3,10,15")
    assert status == 0
    data = json.loads(out)
    assert data["vertices"] == 4
    assert sorted(map(tuple, data["edges"])) == [(0, 2), (1, 3), (2, 3)]


def test_gen_with_closed_form(capsys):
    status, out, _ = run_cli(capsys, "gen", "--family", "cycle", "--n", "5", "--closed-form")
    assert status == 0
    assert "code: (6,10,21,55,77)" in out
    assert "F: x1*x2 + x1*x3 + x2*x4 + x3*x5 + x4*x5" in out


def test_verify_passes(capsys):
    status, out, _ = run_cli(capsys, "verify", EXAMPLE)
    assert status == 0
    assert "all checks passed" in out
    assert "FAIL" not in out


def test_budget_flag_exceeded(capsys):
    status, _, err = run_cli(capsys, "code", "--budget", "10", EXAMPLE)
    assert status == 2
    assert "error" in err


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "10")
    status, _, err = run_cli(capsys, "code", EXAMPLE)
    assert status == 2
    # the explicit flag wins over the environment
    monkeypatch.setenv(BUDGET_ENV_VAR, "10")
    status, out, _ = run_cli(capsys, "code", "--budget", "10000000", EXAMPLE)
    assert status == 0


def test_budget_env_var_malformed(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "plenty")
    status, _, err = run_cli(capsys, "code", EXAMPLE)
    assert status == 1
    assert BUDGET_ENV_VAR in err


def test_missing_file(capsys):
    status, _, err = run_cli(capsys, "code", "no-such-file.edges")
    assert status == 1
    assert "error" in err


def test_format_override(capsys):
    status, out, _ = run_cli(capsys, "code", "--format", "dimacs", str(DATA / "example1.dimacs"))
    assert status == 0
    assert out.strip() == "(2,2,3,3,5,7,10,10,10,11,231)"


def test_format_mismatch_fails(capsys):
    status, _, err = run_cli(capsys, "code", "--format", "graph6", EXAMPLE)
    assert status == 1


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "covers", "--json", EXAMPLE)
    _, second, _ = run_cli(capsys, "covers", "--json", EXAMPLE)
    assert first == second


def test_installed_entry_point():
    result = subprocess.run([sys.executable, "-m", "graphcode.cli", "code", EXAMPLE],
                            capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout.strip() == "(2,2,3,3,5,7,10,10,10,11,231)"


def test_console_script():
    result = subprocess.run(["graphcode", "theta", EXAMPLE], capture_output=True, text=True)
    assert result.returncode == 0
    assert "theta_t: 5" in result.stdout
