import json
import subprocess
import sys

import pytest

from commsyz.cli import (
    ENV_PREFIX,
    REPORT_SCHEMA,
    Report,
    RunConfig,
    build_parser,
    emit,
    main,
    parse_args,
    run_verify_suite,
)


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run_cli(argv + ["--json"], capsys)
    return code, json.loads(out)


# -- argument parsing -------------------------------------------------------------


def test_defaults():
    cfg = parse_args(["verify"])
    assert cfg.command == "verify"
    assert cfg.n == 3
    assert cfg.field == "gf:32003"
    assert cfg.order == "grevlex"
    assert cfg.threads == 1
    assert not cfg.json_output
    assert cfg.budget() is None


def test_nonprime_field_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args(["verify", "--field", "gf:4"])
    assert exc.value.code == 2
    assert "not prime" in capsys.readouterr().err


def test_no_arguments_prints_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args([])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err.lower()


def test_unknown_subcommand_rejected():
    with pytest.raises(SystemExit):
        parse_args(["frobnicate"])


def test_splice_check_size_window():
    assert parse_args(["check-splice", "-n", "3"]).n == 3
    assert parse_args(["check-splice", "-n", "4"]).n == 4
    with pytest.raises(SystemExit):
        parse_args(["check-splice", "-n", "5"])


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="verify", field="gf:6")
    with pytest.raises(ValueError):
        RunConfig(command="verify", n=0)
    with pytest.raises(ValueError):
        RunConfig(command="verify", threads=0)
    with pytest.raises(ValueError):
        RunConfig(command="verify", budget_seconds=-1)
    cfg = RunConfig(command="verify", budget_spairs=10)
    budget = cfg.budget()
    assert budget.max_spairs == 10
    assert budget.on_exhaustion == "partial"


def test_env_overrides(monkeypatch):
    monkeypatch.setenv(f"{ENV_PREFIX}FIELD", "q")
    monkeypatch.setenv(f"{ENV_PREFIX}N", "2")
    monkeypatch.setenv(f"{ENV_PREFIX}JSON", "1")
    monkeypatch.setenv(f"{ENV_PREFIX}BUDGET_SPAIRS", "50")
    cfg = parse_args(["hilbert"])
    assert cfg.field == "q"
    assert cfg.n == 2
    assert cfg.json_output
    assert cfg.budget_spairs == 50
    # explicit flags beat the environment
    cfg2 = parse_args(["hilbert", "-n", "3", "--field", "gf:101"])
    assert cfg2.n == 3 and cfg2.field == "gf:101"


def test_parser_help_documents_env_prefix():
    parser = build_parser()
    assert ENV_PREFIX in (parser.epilog or "")


# -- report and emission -----------------------------------------------------------


def _toy_report():
    cfg = RunConfig(command="verify", n=2)
    results = [
        {"name": "a", "verdict": "PASS", "detail": {"k": 1}},
        {"name": "b", "verdict": "PARTIAL", "detail": {"why": "budget"}},
    ]
    return Report(
        command="verify",
        config=cfg.as_dict(),
        results=results,
        timing={"total_seconds": 0.3, "per_result": {"a": 0.2, "b": 0.1}},
    )


def test_report_json_roundtrip():
    r = _toy_report()
    parsed = json.loads(emit(r, "json"))
    assert parsed == r.as_dict()
    assert parsed["schema"] == REPORT_SCHEMA
    assert [x["name"] for x in parsed["results"]] == ["a", "b"]


def test_exit_code_zero_unless_fail():
    r = _toy_report()
    assert r.exit_code() == 0
    r.results.append({"name": "c", "verdict": "FAIL", "detail": {}})
    assert r.exit_code() == 1
    r.results[-1] = {"name": "c", "verdict": "SKIPPED", "detail": {}}
    assert r.exit_code() == 0


def test_text_emission_shows_verdicts():
    text = emit(_toy_report(), "text")
    assert "PASS" in text and "PARTIAL" in text
    assert "verify" in text


# -- end-to-end subcommands ---------------------------------------------------------


def test_json_reports_are_identical_modulo_timing(capsys):
    code1, rep1 = run_json(["hilbert", "-n", "2"], capsys)
    code2, rep2 = run_json(["hilbert", "-n", "2"], capsys)
    assert code1 == code2 == 0
    t1, t2 = rep1.pop("timing"), rep2.pop("timing")
    assert json.dumps(rep1, sort_keys=True) == json.dumps(rep2, sort_keys=True)
    assert set(t1) == {"total_seconds", "per_result"}


def test_commutator_listing(capsys):
    code, rep = run_json(["commutator", "-n", "2"], capsys)
    assert code == 0
    (res,) = rep["results"]
    assert res["verdict"] == "PASS"
    entries = res["detail"]["entries"]
    assert len(entries) == 4
    assert res["detail"]["diagonal_indices"] == [1, 4]
    assert all(e["bidegree"] == [1, 1] for e in entries)


def test_candidate_listing(capsys):
    code, rep = run_json(["candidates", "--max-degree", "2"], capsys)
    assert code == 0
    rows = rep["results"][0]["detail"]["candidates"]
    assert [r["expr"] for r in rows] == ["E", "X", "Y", "X^2", "XY + YX", "Y^2"]


def test_hilbert_off_diagonal_quotient(capsys):
    code, rep = run_json(["hilbert", "-n", "2", "--ideal", "J"], capsys)
    assert code == 0
    detail = rep["results"][0]["detail"]
    assert detail["numerator"] == [1, 0, -2, 0, 1]
    assert detail["dimension"] == 6


def test_groebner_command_reports_stats_without_seconds(capsys):
    code, rep = run_json(["groebner", "-n", "2", "--ideal", "I"], capsys)
    assert code == 0
    detail = rep["results"][0]["detail"]
    assert detail["complete"] is True
    assert "seconds" not in detail["stats"]
    assert detail["size"] >= 3


def test_desk_guard_refuses_big_runs_without_budget(capsys):
    code, rep = run_json(["groebner", "-n", "4"], capsys)
    assert code == 0
    (res,) = rep["results"]
    assert res["verdict"] == "SKIPPED"
    assert "budget" in res["detail"]["reason"]


def test_desk_guard_lifts_with_explicit_budget(capsys):
    code, rep = run_json(["groebner", "-n", "4", "--budget-spairs", "60"], capsys)
    assert code == 0
    (res,) = rep["results"]
    assert res["verdict"] == "PARTIAL"
    assert res["detail"]["complete"] is False


def test_colon_listing(capsys):
    code, rep = run_json(["colon", "-n", "2"], capsys)
    assert code == 0
    gens = rep["results"][0]["detail"]["new_generators"]
    assert sorted(g["bidegree"] for g in gens) == [[0, 1], [1, 0]]
    assert all(g["degree"] == 1 for g in gens)


def test_verify_command_smallest_size(capsys):
    code, rep = run_json(["verify", "-n", "2"], capsys)
    assert code == 0
    names = [r["name"] for r in rep["results"]]
    assert names == [
        "presentation",
        "matrix-identities",
        "trace-rules",
        "dimension",
        "predictors",
    ]
    assert all(r["verdict"] == "PASS" for r in rep["results"])
    assert set(rep["timing"]["per_result"]) == set(names)


def test_run_verify_suite_matches_main(capsys):
    report = run_verify_suite(RunConfig(command="verify", n=2))
    assert report.exit_code() == 0
    code, rep = run_json(["verify", "-n", "2"], capsys)
    got = {r["name"]: r["verdict"] for r in rep["results"]}
    want = {r["name"]: r["verdict"] for r in report.results}
    assert got == want


def test_predict_commands_flag_conjecture_status(capsys):
    code, rep = run_json(["predict", "betti", "-n", "5"], capsys)
    assert code == 0
    detail = rep["results"][0]["detail"]
    assert detail["status"] == "CONJECTURE"
    assert detail["first_syzygies_by_degree"] == {"1": 2, "2": 279, "3": 4, "4": 5}
    assert detail["total"] == 290
    code, rep = run_json(["predict", "shape", "-n", "3"], capsys)
    assert rep["results"][0]["detail"]["status"] == "CONJECTURE"
    code, rep = run_json(["predict", "colon-degrees", "-n", "4"], capsys)
    assert rep["results"][0]["detail"]["status"] == "CONJECTURE"
    code, rep = run_json(["predict", "knutson", "-n", "3"], capsys)
    detail = rep["results"][0]["detail"]
    assert detail["status"] == "CONJECTURE"
    assert len(detail["candidates"]) == 6


def test_check_splice_both_supported_sizes(capsys):
    code, rep = run_json(["check-splice", "-n", "3"], capsys)
    assert code == 0
    assert rep["results"][0]["verdict"] == "PASS"
    code, rep = run_json(["check-splice", "-n", "4"], capsys)
    assert code == 0
    assert rep["results"][0]["verdict"] == "PASS"


def test_syzygy_check_command(tmp_path, capsys):
    good = tmp_path / "x.mat"
    good.write_text("x_1_1; x_1_2\nx_2_1; x_2_2\n")
    code, rep = run_json(["syzygy-check", "-n", "2", "--matrix", str(good)], capsys)
    assert code == 0
    assert rep["results"][0]["verdict"] == "PASS"

    bad = tmp_path / "bad.mat"
    bad.write_text("x_1_1; x_1_2\nx_2_1; y_2_2\n")
    code, rep = run_json(["syzygy-check", "-n", "2", "--matrix", str(bad)], capsys)
    assert code == 1
    (res,) = rep["results"]
    assert res["verdict"] == "FAIL"
    assert "residual" in res["detail"]

    with pytest.raises(SystemExit) as exc:
        parse_args(["syzygy-check", "-n", "2", "--matrix", str(tmp_path / "nope")])
    assert exc.value.code == 2


def test_syzygies_command(capsys):
    code, rep = run_json(["syzygies", "-n", "2"], capsys)
    assert code == 0
    detail = rep["results"][0]["detail"]
    assert detail["counts"] == {"1": 2}


def test_console_script_roundtrip():
    proc = subprocess.run(
        [sys.executable, "-m", "commsyz.cli", "verify", "-n", "2", "--json"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == 0, proc.stderr
    rep = json.loads(proc.stdout)
    assert rep["schema"] == REPORT_SCHEMA
    assert all(r["verdict"] == "PASS" for r in rep["results"])
