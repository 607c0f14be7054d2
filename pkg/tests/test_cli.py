import json
from pathlib import Path

import pytest

from critset import cli

FIXDIR = Path(__file__).resolve().parent.parent / "fixtures"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text_output(capsys):
    code, out, _ = run_cli(capsys, "analyze", str(FIXDIR / "fig511.edges"))
    assert code == 0
    assert "n=13 m=15" in out and "d=1" in out
    assert "ker     = v1 v2" in out
    assert "core    = v1 v2 v6 v10" in out


def test_analyze_json_output(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--json",
                           str(FIXDIR / "fig511.edges"))
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1 and rep["kind"] == "analysis"
    assert rep["d"] == 1 and rep["alpha"] == 7 and rep["mu"] == 6
    assert rep["ker"] == ["v1", "v2"]
    assert rep["diadem"] == ["v1", "v2", "v3", "v4", "v6", "v7", "v8",
                             "v10", "v11", "v13"]
    assert rep["skipped"] == {}
    assert set(rep["methods"]) == {"polynomial", "search", "oracle"}


def test_analyze_bipartite_block(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--json",
                           str(FIXDIR / "fig233.edges"))
    rep = json.loads(out)
    assert code == 0
    assert rep["bipartite"] and rep["ore"]["delta0_a"] == 1
    assert rep["ore"]["ker_b"] == ["b5", "b6", "b7"]
    assert rep["ke"] and all(c["holds"] for c in rep["ke_identities"])


def test_analyze_no_oracle_strict_exits_3(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--no-oracle", "--strict",
                           str(FIXDIR / "fig511.edges"))
    assert code == 3
    assert "skipped core: oracle disabled" in out


def test_check_applicability_line(capsys):
    code, out, _ = run_cli(capsys, "check", str(FIXDIR / "fig22_g1.edges"),
                           "--property", "ke.is_ke")
    assert code == 0
    assert out.strip() == "ke.is_ke: fails applicability: not KE"


def test_check_holds_line(capsys):
    code, out, _ = run_cli(capsys, "check", str(FIXDIR / "fig511.edges"),
                           "--property", "zhang.d_eq_id")
    assert code == 0
    assert out.strip() == "zhang.d_eq_id: holds"


def test_check_failure_prints_witness_and_exits_1(capsys, tmp_path):
    f = tmp_path / "three.edges"
    f.write_text("vertex a\nvertex b\nvertex c\n")
    code, out, _ = run_cli(capsys, "check", str(f),
                           "--property", "selftest.alpha_le_two")
    assert code == 1
    assert "selftest.alpha_le_two: fails  witness:" in out
    assert '"alpha": 3' in out


def test_check_all_runs_whole_registry(capsys):
    code, out, _ = run_cli(capsys, "check", "--all",
                           str(FIXDIR / "fig101.edges"))
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 26
    assert not any("fails  witness:" in l for l in lines)


def test_check_unknown_property_exits_2(capsys):
    code, _, err = run_cli(capsys, "check", str(FIXDIR / "fig511.edges"),
                           "--property", "no.such.thing")
    assert code == 2
    assert "unknown property" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run_cli(capsys, "analyze", "/nonexistent/g.edges")
    assert code == 2
    assert "error:" in err


def test_parse_error_reports_file_and_line(capsys, tmp_path):
    f = tmp_path / "bad.edges"
    f.write_text("a b\nc c\n")
    code, _, err = run_cli(capsys, "analyze", str(f))
    assert code == 2
    assert f"error: {f}:2:" in err


def test_exhaustive_small_sweep(capsys):
    code, out, _ = run_cli(capsys, "exhaustive", "--n", "5",
                           "--properties", "zhang.d_eq_id", "th6.ker_subset_core")
    assert code == 0
    assert out.startswith("graphs: 1024 ")
    assert "fails: 0" in out


def test_exhaustive_rejects_large_n(capsys):
    code, _, err = run_cli(capsys, "exhaustive", "--n", "9")
    assert code == 2
    assert "exhaustive sweep supports" in err


def test_fuzz_output_is_byte_stable(capsys):
    argv = ["fuzz", "--n", "6..9", "--p", "0.3", "--count", "8", "--seed",
            "42", "--json"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run_cli(capsys, *argv, "--workers", "2")
    assert code3 == 0 and out3 == out1


def test_fuzz_bad_range_exits_2(capsys):
    code, _, err = run_cli(capsys, "fuzz", "--n", "9..6", "--p", "0.3",
                           "--count", "2", "--seed", "1")
    assert code == 2
    assert "bad range" in err


def test_conjecture_sweep(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--max-n", "4")
    assert code == 0
    assert "violations: 0" in out
    assert "n=4: graphs=64 min_slack=0" in out


def test_conjecture_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--max-n", "3", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["kind"] == "conjecture-scan"
    assert rep["summary"]["min_slack"] == 0


def test_conjecture_violation_exits_1(capsys, monkeypatch):
    fake = {
        "schema": 1, "kind": "conjecture-scan", "corpus": {"sources": []},
        "per_n": {"4": {"graphs": 1, "min_slack": -2, "min_slack_upper": 0}},
        "summary": {"graphs": 1, "checked": 1, "skipped": [],
                    "min_slack": -2, "min_slack_upper": 0,
                    "violations": [{
                        "graph": "exhaustive:n=4:7", "kind": "ker-diadem",
                        "n": 4, "edges": [[0, 1]], "lhs": 10, "rhs": 8,
                        "shrunk": {"n": 2, "edges": [[0, 1]],
                                   "lhs": 5, "rhs": 4}}]},
    }
    monkeypatch.setattr(cli, "conjecture_scan", lambda corpus, config: fake)
    code, out, _ = run_cli(capsys, "conjecture", "--max-n", "4")
    assert code == 1
    assert "VIOLATION (ker-diadem)" in out and "shrunk witness: n=2" in out


def test_conjecture_corpus_file(capsys, tmp_path):
    spec = tmp_path / "corpus.json"
    spec.write_text(json.dumps({"sources": [{"kind": "fixtures"}]}))
    code, out, _ = run_cli(capsys, "conjecture", "--corpus", str(spec),
                           "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["graphs"] == 16
    assert rep["summary"]["violations"] == []


def test_fixtures_list(capsys):
    code, out, _ = run_cli(capsys, "fixtures")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    assert lines[0].startswith("fig511")


def test_fixtures_verify_reports_notes(capsys):
    code, out, _ = run_cli(capsys, "fixtures", "verify")
    assert code == 0
    assert out.count(" ok ") == 16
    assert "FAIL" not in out
    assert "note on ker_b" in out
    assert "note on diadem" in out


def test_dimacs_format_flag(capsys, tmp_path):
    f = tmp_path / "c4.col"
    f.write_text("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    code, out, _ = run_cli(capsys, "analyze", "--json", str(f))
    rep = json.loads(out)
    assert code == 0
    assert rep["n"] == 4 and rep["m"] == 4 and rep["bipartite"]
