"""Command-line interface: reports, exit codes, schema conformance."""

from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from turantrees.cli import eval_nexpr, main
from turantrees.graphs import SimpleGraph, read_graph_file, to_graph6

SCHEMA = json.loads(
    resources.files("turantrees").joinpath("report_schema.json").read_text()
)


def run_cli(capsys, *argv: str) -> tuple[int, dict | str]:
    code = main(["--quiet", *argv])
    out = capsys.readouterr().out
    try:
        report = json.loads(out)
    except json.JSONDecodeError:
        return code, out
    jsonschema.validate(report, SCHEMA)
    return code, report


# ----------------------------------------------------------------- n-expr DSL

@pytest.mark.parametrize(
    "expr,n,value",
    [("20", 15, 20), ("n", 15, 15), ("2n-9", 15, 21), ("4n", 10, 40), ("n+3", 12, 15)],
)
def test_eval_nexpr(expr, n, value):
    assert eval_nexpr(expr, n) == value


def test_eval_nexpr_rejects_junk():
    with pytest.raises(ValueError):
        eval_nexpr("n*n", 5)
    with pytest.raises(ValueError):
        eval_nexpr("", 5)


# -------------------------------------------------------------------- formula

def test_formula_frozen_t3(capsys):
    code, rep = run_cli(capsys, "formula", "t3", "15", "23")
    assert code == 0
    assert rep["value"] == 127
    assert rep["branch"] == "Thm4.3"
    assert rep["family_spec"] == "t3:15"


def test_formula_frozen_tpp(capsys):
    code, rep = run_cli(capsys, "formula", "tpp", "15", "20")
    assert code == 0
    assert rep["value"] == 106
    assert rep["branch"] == "Thm3.1/clique-arm"


def test_formula_domain_violation_exits_2(capsys):
    code, rep = run_cli(capsys, "formula", "t3", "12", "20")
    assert code == 2
    assert rep["ok"] is False
    assert "n >= 15" in rep["error"]


def test_formula_partial_flag(capsys):
    code, rep = run_cli(capsys, "formula", "t3", "12", "17", "--partial")
    assert code == 0 and rep["partial"] is True
    code, rep = run_cli(capsys, "formula", "t3", "12", "15", "--partial")
    assert code == 2
    assert "residue r=4" in rep["error"]


def test_formula_star_uses_leaf_count(capsys):
    code, rep = run_cli(capsys, "formula", "star", "3", "8")
    assert code == 0 and rep["value"] == 8
    assert rep["family_spec"] == "star:3"


# ------------------------------------------------------------------ construct

def test_construct_writes_formula_matching_graph(capsys, tmp_path):
    out = tmp_path / "extremal.g6"
    code, rep = run_cli(capsys, "construct", "t3", "15", "21", str(out))
    assert code == 0
    assert rep["edges"] == 112
    assert rep["recipe"]["base"] == "clique-union"
    g = read_graph_file(str(out))
    assert g.edge_count() == 112 and g.n == 21


def test_construct_connected_variant(capsys, tmp_path):
    out = tmp_path / "connected.g6"
    code, rep = run_cli(capsys, "construct", "t3", "26", "43", str(out), "--connected")
    assert code == 0
    assert rep["edges"] == 453
    assert rep["recipe"]["base"] == "L4.6-even"
    assert read_graph_file(str(out)).is_connected()


def test_construct_regular_arm(capsys, tmp_path):
    out = tmp_path / "reg.g6"
    code, rep = run_cli(capsys, "construct", "tpp", "30", "42", str(out))
    assert code == 0 and rep["edges"] == 525
    assert rep["recipe"]["base"] == "near-regular"


def test_construct_edge_format(capsys, tmp_path):
    out = tmp_path / "graph.edges"
    code, rep = run_cli(
        capsys, "construct", "tpp", "12", "17", str(out), "--format", "edges"
    )
    assert code == 0
    text = out.read_text()
    assert all(len(line.split()) == 2 for line in text.splitlines())
    assert read_graph_file(str(out)).edge_count() == rep["edges"]


def test_construct_bad_path_exits_2(capsys, tmp_path):
    code, rep = run_cli(
        capsys, "construct", "t3", "15", "21", str(tmp_path / "no" / "dir" / "x.g6")
    )
    assert code == 2 and rep["ok"] is False


# ---------------------------------------------------------------------- check

def test_check_construction_is_free(capsys, tmp_path):
    out = tmp_path / "host.g6"
    run_cli(capsys, "construct", "t3", "15", "21", str(out))
    code, rep = run_cli(capsys, "check", str(out), "t3:15")
    assert code == 0
    assert rep["contains"] is False
    assert rep["witness"] is None


def test_check_complete_host_contains(capsys, tmp_path):
    out = tmp_path / "k15.g6"
    out.write_text(to_graph6(SimpleGraph.complete(15)) + "\n")
    code, rep = run_cli(capsys, "check", str(out), "t3:15")
    assert code == 0
    assert rep["contains"] is True
    assert rep["witness_valid"] is True
    assert len(rep["witness"]) == 15

    small = tmp_path / "k14.g6"
    small.write_text(to_graph6(SimpleGraph.complete(14)) + "\n")
    code, rep = run_cli(capsys, "check", str(small), "t3:15")
    assert code == 0 and rep["contains"] is False


def test_check_explicit_tree_from_file(capsys, tmp_path):
    tree_file = tmp_path / "tree.edges"
    tree_file.write_text("0 1\n1 2\n")
    host = tmp_path / "host.g6"
    host.write_text(to_graph6(SimpleGraph.complete(3)) + "\n")
    code, rep = run_cli(capsys, "check", str(host), f"file:{tree_file}")
    assert code == 0 and rep["contains"] is True


def test_check_missing_file_exits_2(capsys):
    code, rep = run_cli(capsys, "check", "/nonexistent.g6", "t3:15")
    assert code == 2


# --------------------------------------------------------------------- oracle

def test_oracle_matches_formula(capsys):
    code, rep = run_cli(capsys, "oracle", "7", "path:4")
    assert code == 0
    assert rep["value"] == 6
    assert rep["exact"] is True
    assert rep["equal"] is True
    assert rep["formula"] == 6
    witness = rep["witness_graph6"]
    from turantrees.graphs import from_graph6

    assert from_graph6(witness).edge_count() == 6


def test_oracle_budget_exhaustion_exits_1(capsys):
    code, rep = run_cli(capsys, "oracle", "8", "path:4", "--budget-nodes", "50")
    assert code == 1
    assert rep["exact"] is False
    assert rep["ok"] is False


def test_oracle_no_formula_family(capsys, tmp_path):
    tree_file = tmp_path / "fork.edges"
    tree_file.write_text("0 1\n1 2\n2 3\n1 4\n")
    code, rep = run_cli(capsys, "oracle", "6", f"file:{tree_file}")
    assert code == 0
    assert rep["formula"] is None and rep["equal"] is None
    assert rep["exact"] is True


# --------------------------------------------------------------------- verify

def test_verify_default_sweep_passes(capsys):
    code, rep = run_cli(capsys, "verify", "--n", "15..16", "--p", "n..2n")
    assert code == 0
    assert rep["ok"] is True
    assert rep["counts"]["failures"] == 0
    assert rep["counts"]["total"] > 0
    for name in (
        "identity",
        "sandwich",
        "recurrence",
        "dominance",
        "special_residues",
        "constructions",
    ):
        assert rep["results"][name]["failures"] == 0


def test_verify_connected_construction_row(capsys):
    code, rep = run_cli(capsys, "verify", "--n", "26..27", "--p", "2n-9")
    assert code == 0 and rep["ok"] is True
    # three families checked once per n, plus the connected variant for t3
    assert rep["results"]["constructions"]["checked"] == 8
    assert rep["results"]["constructions"]["failures"] == 0


def test_verify_family_subset_and_bad_tag(capsys):
    code, rep = run_cli(capsys, "verify", "--n", "15..15", "--p", "n..n+2",
                        "--families", "tpp")
    assert code == 0
    assert rep["results"]["dominance"]["checked"] == 0
    code, rep = run_cli(capsys, "verify", "--families", "path")
    assert code == 2


def test_verify_oracle_suite(capsys):
    code, rep = run_cli(capsys, "verify", "--n", "15..15", "--p", "n..n", "--oracle")
    assert code == 0
    oracle = rep["results"]["oracle"]
    assert oracle["all_equal"] is True
    assert len(oracle["rows"]) == 20
    assert all(row["equal"] for row in oracle["rows"])


def test_verify_empty_range_exits_2(capsys):
    code, rep = run_cli(capsys, "verify", "--n", "20..15")
    assert code == 2


# ---------------------------------------------------------------------- table

def test_table_frozen_rows(capsys):
    code, rep = run_cli(capsys, "table", "t3", "15", "15", "43")
    assert code == 0
    assert len(rep["rows"]) == 29
    by_p = {row["p"]: row for row in rep["rows"]}
    assert by_p[23]["value"] == 127 and by_p[23]["branch"] == "Thm4.3"
    assert by_p[21]["value"] == 112
    assert by_p[22]["value"] == 119


def test_table_single_row(capsys):
    code, rep = run_cli(capsys, "table", "t3", "15", "15", "15")
    assert code == 0
    (row,) = rep["rows"]
    assert row == {"p": 15, "k": 1, "r": 1, "value": 91, "branch": "Thm4.1"}


def test_table_tpp_row(capsys):
    code, rep = run_cli(capsys, "table", "tpp", "15", "15", "29")
    assert code == 0
    assert {row["p"]: row["value"] for row in rep["rows"]}[29] == 182


def test_table_csv(capsys):
    code, out = run_cli(capsys, "table", "path", "4", "4", "8", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,k,r,value,branch"
    assert len(lines) == 6
    assert lines[4].startswith("7,2,1,6,")


def test_table_empty_range_exits_2(capsys):
    code, rep = run_cli(capsys, "table", "t3", "15", "20", "15")
    assert code == 2


# ------------------------------------------------------------------ the shell

def test_console_script_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "turantrees", "--quiet", "formula", "t3", "15", "23"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["value"] == 127
    jsonschema.validate(rep, SCHEMA)


def test_error_reports_also_validate(capsys):
    code, rep = run_cli(capsys, "formula", "t3", "12", "20")
    assert code == 2
    jsonschema.validate(rep, SCHEMA)
