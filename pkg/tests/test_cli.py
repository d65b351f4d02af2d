"""CLI surface: shorthands, output formats, exit codes, cache behavior."""

import json

import pytest

from epolab.cli import main, parse_graph_spec, parse_profile_spec, SpecError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_graph_spec_shorthands():
    assert parse_graph_spec("spider:6,4,1,1").n == 13
    assert parse_graph_spec("spider:1,1,6,4").n == 13  # legs sorted leniently
    assert parse_graph_spec("path:7").n == 7
    assert parse_graph_spec("star:5").n == 5
    with pytest.raises(SpecError):
        parse_graph_spec("blob:3")
    with pytest.raises(SpecError):
        parse_graph_spec("/nonexistent/graph.txt")


def test_parse_graph_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("2\n0 1\n")
    assert parse_graph_spec(str(p)).edges == frozenset({(0, 1)})


def test_parse_profile_spec():
    prof = parse_profile_spec("profile:a=6,b=4,cs=1,1")
    assert (prof.a, prof.b, prof.cs) == (6, 4, (1, 1))
    with pytest.raises(SpecError):
        parse_profile_spec("profile:a=6,b=4")
    with pytest.raises(SpecError):
        parse_profile_spec("profile:cs=1,1,a=2,b=4")  # violates a >= b


def test_csf_star_text(capsys):
    code, out, _ = run(capsys, "csf", "spider:1,1,1")
    assert code == 0
    assert out.splitlines() == [
        "4 * e_(4)",
        "5 * e_(3,1)",
        "-2 * e_(2,2)",
        "1 * e_(2,1,1)",
    ]
    code, out, _ = run(capsys, "csf", "spider:4,1,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "7 * e_(7)" and "-3 * e_(3,2,2)" in lines


def test_csf_file_and_json(capsys, tmp_path):
    p = tmp_path / "k2.txt"
    p.write_text("2\n0 1\n")
    code, out, _ = run(capsys, "csf", str(p))
    assert code == 0 and out.strip() == "2 * e_(2)"
    code, out, _ = run(capsys, "csf", str(p), "--json")
    assert json.loads(out) == {"degree": 2, "terms": [{"lambda": [2], "coeff": "2"}]}


def test_csf_guard_and_usage(capsys):
    code, _, err = run(capsys, "csf", "path:21")
    assert code == 3 and "guard" in err
    code, _, err = run(capsys, "csf", "blob:4")
    assert code == 2


def test_epos_exit_codes(capsys):
    code, out, _ = run(capsys, "epos", "spider:5,3,2")
    assert code == 0 and out.strip() == "e-positive"
    code, out, _ = run(capsys, "epos", "spider:4,1,1")
    assert code == 1 and "-3 * e_(3,2,2)" in out
    code, out, _ = run(capsys, "epos", "spider:1,1,1")
    assert code == 1


def test_connparts(capsys):
    code, out, _ = run(capsys, "connparts", "spider:1,1,1")
    assert code == 1 and "(2,2)" in out
    code, out, _ = run(capsys, "connparts", "spider:4,1,1")
    assert code == 0 and "complete" in out
    code, out, _ = run(capsys, "connparts", "spider:1,1,1", "--type", "(2,2)")
    assert code == 1 and "absent" in out
    code, out, _ = run(capsys, "connparts", "spider:3,2,1", "--type", "(3,2,2)")
    assert code == 0 and "present" in out
    code, out, err = run(capsys, "connparts", "spider:3,2,1", "--type", "(3,3)")
    assert code == 2


def test_prove_profile_certificate(capsys):
    code, out, _ = run(capsys, "prove", "profile:a=2,b=2,cs=2,2,2")
    assert code == 0
    cert = json.loads(out)
    assert cert["verified"] is True
    assert cert["profile"] == {"a": 2, "b": 2, "cs": [2, 2, 2]}


def test_prove_not_applicable(capsys):
    code, out, _ = run(capsys, "prove", "spider:6,4,1,1")
    assert code == 1 and out.startswith("NOT-APPLICABLE")
    code, out, _ = run(capsys, "prove", "spider:5,3,2")
    assert code == 1 and out.startswith("NOT-APPLICABLE")
    code, out, _ = run(capsys, "prove", "path:6")
    assert code == 1 and "NOT-APPLICABLE" in out


def test_trees_scan_small(capsys):
    # no tree on <= 4 vertices has a degree-4 vertex; the first is the
    # 5-vertex star, and it is not e-positive
    code, out, _ = run(capsys, "trees-scan", "4")
    assert code == 0
    assert "no counterexamples" in out
    assert any(line.split() == ["4", "0", "0"] for line in out.splitlines())
    code, out, _ = run(capsys, "trees-scan", "5")
    assert code == 0
    assert any(line.split() == ["5", "1", "0"] for line in out.splitlines())


def test_trees_scan_guard(capsys):
    code, _, err = run(capsys, "trees-scan", "15")
    assert code == 3


def test_trees_scan_eight_and_jobs_determinism(capsys):
    code, out1, _ = run(capsys, "trees-scan", "8")
    assert code == 0 and "no counterexamples" in out1
    code, out2, _ = run(capsys, "trees-scan", "8", "--jobs", "2")
    assert code == 0 and out2 == out1


def test_trees_scan_cache(capsys, tmp_path):
    cache = tmp_path / "cache.jsonl"
    code1, out1, _ = run(capsys, "trees-scan", "6", "--cache", str(cache))
    assert code1 == 0 and cache.exists()
    lines = cache.read_text().splitlines()
    assert len(lines) == 3  # one deg>=4 tree at n=5, two at n=6
    rec = json.loads(lines[0])
    assert rec["command"] == "trees-scan" and rec["result"]["e_positive"] is False
    # a second run is a pure cache hit: no new lines, identical output
    code2, out2, _ = run(capsys, "trees-scan", "6", "--cache", str(cache))
    assert code2 == 0 and out2 == out1
    assert cache.read_text().splitlines() == lines


def test_sweep_c40_cli(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    csv_file = tmp_path / "cells.csv"
    code, out, _ = run(
        capsys, "sweep", "c40", "2..10", "--out", str(out_file), "--csv", str(csv_file)
    )
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == [] and report["kind"] == "c40"
    assert json.loads(out_file.read_text()) == report
    rows = csv_file.read_text().splitlines()
    assert rows[0] == "c,b,n_lo,n_hi,cells,failures"
    assert len(rows) > 1


def test_sweep_c500_cli_sampled(capsys):
    code, out, _ = run(capsys, "sweep", "c500", "41..60", "--mode", "sampled")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == [] and report["params"]["mode"] == "sampled"


def test_sweep_output_deterministic_across_jobs(capsys):
    code1, out1, _ = run(capsys, "sweep", "c40", "2..12")
    code2, out2, _ = run(capsys, "sweep", "c40", "2..12", "--jobs", "2")
    r1, r2 = json.loads(out1), json.loads(out2)
    r1.pop("wall_time_ms")
    r2.pop("wall_time_ms")
    assert code1 == code2 == 0 and r1 == r2


def test_sweep_bad_range(capsys):
    code, _, err = run(capsys, "sweep", "c500", "30..700")
    assert code == 2


def test_bad_parallelism(capsys):
    code, _, err = run(capsys, "sweep", "c40", "2..5", "--jobs", "0")
    assert code == 2 and "parallelism" in err


def test_disconnected_input_rejected(capsys, tmp_path):
    p = tmp_path / "disc.txt"
    p.write_text("4\n0 1\n2 3\n")
    code, _, err = run(capsys, "connparts", str(p))
    assert code == 2 and "connected" in err
    code, _, err = run(capsys, "prove", str(p))
    assert code == 2 and "connected" in err


def test_sixm_cli(capsys):
    code, out, _ = run(capsys, "sixm", "1", "--cross-check")
    assert code == 0
    assert "101/101" in out and "agrees: True" in out
    code, out, _ = run(capsys, "sixm", "2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["total"] == 1958 and rep["failures"] == []
    code, _, _ = run(capsys, "sixm", "4")
    assert code == 2
