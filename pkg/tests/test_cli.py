import json
import os
import subprocess
import sys

import pytest

from kalliance.cli import main, parse_k_range, split_gens, UsageError
from kalliance.graph import parse_gen
from kalliance.logic import AllianceSpec
from kalliance.solver import max_free, min_cover


def run(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "kalliance.cli", *args],
        capture_output=True, text=True, env={**os.environ, **(env or {})},
    )


def test_compute_phi_k5():
    p = run("compute", "--gen", "complete:5", "--kind", "defensive", "--k", "1", "--invariant", "phi")
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    row = doc["results"][0]
    assert row["value"] == 3 and row["witness"] == sorted(row["witness"])
    assert set(row) == {"graph", "n", "invariant", "k", "kind", "global", "value", "witness", "method"}
    assert "phi_k k=1: 3" in p.stderr


def test_cli_matches_library():
    p = run("compute", "--gen", "c8-chords", "--kind", "offensive", "--k", "0", "--invariant", "zeta")
    row = json.loads(p.stdout)["results"][0]
    g = parse_gen("c8-chords")
    lib = min_cover(g, AllianceSpec.offensive(0)).as_dict()
    assert {k: row[k] for k in lib} == lib
    assert row["value"] == g.n - max_free(g, AllianceSpec.offensive(0)).value


def test_timing_only_on_request():
    p = run("compute", "--gen", "cycle:5", "--k", "0", "--timing")
    assert "elapsed_ms" in json.loads(p.stdout)["results"][0]


@pytest.mark.parametrize(
    "args",
    [
        ["compute", "--graph", "missing.edges"],
        ["compute", "--gen", "complete:5", "--k", "9"],
        ["compute", "--gen", "complete:5", "--k", "x..2"],
        ["compute", "--gen", "nosuch:3"],
        ["compute"],
        ["verify", "--theorems", "bogus-id"],
        ["bounds", "--gen", "cycle:4", "--bounds", "B9"],
        ["verify", "--corpus", "elsewhere"],
        ["compute", "--bogus-flag"],
    ],
)
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_size_caps_exit_3():
    assert run("compute", "--gen", "path:65", "--k", "0").returncode == 3
    assert run("verify", "--gen", "path:11", "--theorems", "T-dual").returncode == 3


def test_bounds_csv():
    p = run("bounds", "--gen", "complete:5", "--k", "1..3", "--format", "csv")
    assert p.returncode == 0
    lines = p.stdout.strip().splitlines()
    assert lines[0].startswith("graph,k,bound_id")
    assert len(lines) == 1 + 3 * 9
    assert all(",holds-tight," in ln or ",holds-slack," in ln for ln in lines[1:])


def test_bounds_disconnected_rows():
    p = run("bounds", "--gen", "path:2,path:2-disjoint", "--k", "0")
    rows = json.loads(p.stdout)["rows"]
    status = {(r["graph"], r["bound_id"]): r["status"] for r in rows}
    assert status[("path:2-disjoint", "B3-lower")] == "premise-unmet"
    assert status[("path:2-disjoint", "B4")] == "premise-unmet"
    assert status[("path:2", "B3-lower")] != "premise-unmet"


def test_bounds_b7_on_c4():
    p = run("bounds", "--gen", "cycle:4", "--k", "0", "--bounds", "B7")
    (row,) = json.loads(p.stdout)["rows"]
    assert (row["bound_value"], row["exact_value"], row["status"]) == (2, 2, "holds-tight")


def test_skipped_k_is_reported():
    p = run("bounds", "--gen", "cycle:4", "--k", "1..3", "--bounds", "B7")
    doc = json.loads(p.stdout)
    assert [s["k"] for s in doc["skipped"]] == [3]


def test_verify_c8_counterexample():
    p = run("verify", "--gen", "c8-chords", "--theorems", "T-oac-counter", "--k", "0")
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    assert doc["summary"]["T-oac-counter"]["status"] == "verified"


def test_verify_nonzero_on_counterexample(monkeypatch, capsys):
    from kalliance import verifier

    monkeypatch.setattr(verifier, "dominates", lambda g, mask: False)
    assert main(["verify", "--gen", "cycle:4", "--theorems", "T-dom", "--k", "0"]) == 1


def test_verify_dir_corpus_and_dimacs(tmp_path):
    (tmp_path / "tri.edges").write_text("0 1\n1 2\n2 0\n")
    (tmp_path / "c4.col").write_text("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    (tmp_path / "notes.md").write_text("ignored")
    p = run("verify", "--corpus", f"dir:{tmp_path}", "--theorems", "T-dual,T-oac2")
    assert p.returncode == 0, p.stderr
    graphs = {t["graph"] for t in json.loads(p.stdout)["tasks"]}
    assert graphs == {"tri", "c4"}


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\ngen = complete:6\nkind = offensive\ninvariant = phi\nk = 1\n")
    p = run("compute", "--config", str(cfg))
    assert p.returncode == 0, p.stderr
    assert json.loads(p.stdout)["results"][0]["value"] == 2
    # flags on the command line win
    p = run("compute", "--config", str(cfg), "--k", "3")
    assert json.loads(p.stdout)["results"][0]["k"] == 3
    cfg.write_text("colour = blue\n")
    assert run("compute", "--config", str(cfg)).returncode == 2


def test_json_is_byte_identical_and_parallel_safe():
    args = ["verify", "--gen", "cycle:5,star:5,gnp:7,0.5,1", "--theorems", "T-dom,T-13,B3-lower"]
    a = run(*args)
    b = run(*args, env={"KALLIANCE_WORKERS": "2"})
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_helpers():
    assert split_gens("path:2,path:2-disjoint") == ["path:2", "path:2-disjoint"]
    assert split_gens("gnp:8,0.5,1,cycle:4") == ["gnp:8,0.5,1", "cycle:4"]
    assert parse_k_range("-2..1") == [-2, -1, 0, 1]
    assert parse_k_range("3") == [3]
    assert parse_k_range(None) is None
    with pytest.raises(UsageError):
        parse_k_range("3..1")
