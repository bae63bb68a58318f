import csv
import io
import json

import pytest

from mbezout.cli import main
from mbezout.graphs import Graph, canonical_form, format_edge_list, parse_edge_list

PRISM = Graph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                  (1, 4), (2, 5), (3, 6)))


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_generate_tally(capsys):
    rc, out, _ = run(capsys, "generate", "-d", "2", "-n", "6", "--tally")
    assert rc == 0
    assert "13" in out
    assert "H1 planar: 11" in out


def test_generate_count_only_json(capsys):
    rc, out, _ = run(capsys, "generate", "-d", "3", "-n", "6",
                     "--count-only", "--format", "json")
    assert rc == 0
    assert json.loads(out) == 4


def test_bound_named_graph_json(capsys):
    rc, out, _ = run(capsys, "bound", "--graph", "l136",
                     "--method", "both", "--format", "json")
    assert rc == 0
    blob = json.loads(out)
    row = blob["rows"][0]
    assert row["mB_orient"] == 192
    assert row["mB_perm"] == 192
    assert blob["method"] == "both"


def test_bound_base_all_lists_every_base(capsys):
    rc, out, _ = run(capsys, "bound", "--graph", "prism",
                     "--base", "all", "--format", "json")
    assert rc == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 9
    assert {r["value"] for r in rows} == {32}


def test_bound_explicit_base_and_edges(capsys):
    rc, out, _ = run(capsys, "bound",
                     "--edges", "1-2,1-3,2-3,1-4,3-4,1-5,4-5",
                     "--base", "1,2", "--format", "json")
    assert rc == 0
    assert json.loads(out)["rows"][0]["value"] == 8


def test_bound_file_roundtrip(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(format_edge_list(PRISM, 2))
    rc, out, _ = run(capsys, "bound", "--file", str(path),
                     "--format", "json")
    assert rc == 0
    blob = json.loads(out)
    assert blob["n"] == 6
    assert blob["rows"][0]["value"] == 32
    # the parsed graph is the one we wrote
    g2, _ = parse_edge_list(path.read_text())
    assert canonical_form(g2) == canonical_form(PRISM)


def test_bound_emit_matrix(capsys):
    rc, out, _ = run(capsys, "bound", "--graph", "prism",
                     "--method", "permanent", "--emit-matrix")
    assert rc == 0
    assert "# base (1, 2), columns" in out
    digit_rows = [l for l in out.splitlines()
                  if l and set(l) <= {"0", "1", " "}]
    assert len(digit_rows) == 8


def test_compare_csv_contract(capsys):
    rc, out, _ = run(capsys, "compare", "--graph", "prism")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0].keys() == {"graph", "d", "base", "bezout", "mB_orient",
                              "mB_perm", "bregman_minc", "felsner_zickfeld"}
    assert rows[0]["bezout"] == "256"
    assert rows[0]["mB_orient"] == "32"
    assert rows[0]["mB_perm"] == "32"
    assert rows[0]["bregman_minc"] == "96.0000"
    assert rows[0]["felsner_zickfeld"] == "2"


def test_compare_nonplanar_leaves_column_empty(capsys):
    rc, out, _ = run(capsys, "compare", "--graph", "double_banana")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["felsner_zickfeld"] == ""


def test_exactness_text_verdict(capsys):
    rc, out, _ = run(capsys, "exactness", "--graph", "prism",
                     "--eliminate", "--fix-reflection", "--seed", "11")
    assert rc == 0
    assert "inexact" in out
    assert "delta vertices (4, 5, 6)" in out
    assert "seed=11" in out


def test_exactness_json_is_full_report(capsys):
    rc, out, _ = run(capsys, "exactness", "--graph", "jackson_owen",
                     "--eliminate", "--seed", "11", "--format", "json")
    assert rc == 0
    blob = json.loads(out)
    assert blob["verdict"] == "inexact"
    # keep_s auto-filled from the catalog entry
    assert blob["preprocessing"]["keep_s"] == [8]
    assert blob["witness"]["zero_e_vars"] == ["t8_3"]


def test_exactness_strict_exit_on_indeterminate(capsys):
    rc, out, _ = run(capsys, "exactness", "--graph", "prism",
                     "--pair-cap", "0", "--strict")
    assert rc == 2
    assert "indeterminate" in out


def test_exactness_emit_systems(capsys, tmp_path):
    rc, _, _ = run(capsys, "exactness", "--graph", "prism", "--eliminate",
                   "--fix-reflection", "--seed", "11",
                   "--emit-systems", str(tmp_path))
    assert rc == 0
    assert any(p.suffix == ".json" for p in tmp_path.iterdir())


def test_error_exit_codes(capsys, tmp_path):
    rc, _, err = run(capsys, "bound", "--graph", "nope")
    assert rc == 1 and "unknown graph" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("6 2\n1 2 3\n")
    rc, _, err = run(capsys, "bound", "--file", str(bad))
    assert rc == 1
    rc, _, err = run(capsys, "bound", "--edges", "1-2,1-3",
                     "--base", "9,9")
    assert rc == 1
