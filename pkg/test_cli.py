"""Test the command-line interface through click's runner."""
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from cli.commands import cli, run
from config import settings

CORPUS = Path(settings.CORPUS_DIR)
TIGER = ["--model", str(CORPUS / "tiger.json"), "--context", str(CORPUS / "tiger-ctx.json")]


@pytest.fixture
def runner():
    return CliRunner()


def test_parse(runner):
    result = runner.invoke(cli, ["parse", "p -> q"])
    assert result.exit_code == 0
    assert result.output == "~(p & ~q)\n"
    result = runner.invoke(cli, ["parse", "--sugar", "p -> q"])
    assert result.output == "p -> q\n"
    result = runner.invoke(cli, ["--format", "json", "parse", "X p"])
    payload = json.loads(result.output)
    assert payload["horizon"] == 1
    assert {"XY", "N_XY", "Con_XY", "OneBox", "ConSHN"} <= set(payload["fragments"])


def test_eval(runner):
    result = runner.invoke(cli, ["eval", *TIGER, "--leaf", "w1_5", "--instant", "0", "[X l] X ~a"])
    assert result.exit_code == 0
    assert result.output == "true\n"
    result = runner.invoke(cli, ["eval", *TIGER, "--leaf", "w1_5", "--instant", "0", "box X l"])
    assert result.exit_code == 1
    assert result.output == "false\n"


def test_eval_trace(runner):
    result = runner.invoke(cli, ["--trace", "eval", *TIGER, "--leaf", "w1_5", "--instant", "1", "r & a"])
    lines = result.output.splitlines()
    assert lines[-1] == "true"
    assert len(lines) == 4


def test_rule_and_update(runner):
    result = runner.invoke(cli, ["rule", *TIGER, "--instant", "0", "X l"])
    assert result.output == "[X l]^0: ['w1_3', 'w1_4']\n"
    result = runner.invoke(cli, ["update", *TIGER, "--instant", "0", "X l"])
    assert result.output == "AT: ['w1_3']\n"


@pytest.mark.parametrize("stage, formula, expected", [
    ("mu", "[p] [q] r", "box ((p & q) -> r)"),
    ("kappa", "X [p] q", "[X p] X q"),
    ("both", "X [p] q", "box (X p -> X q)"),
])
def test_reduce(runner, stage, formula, expected):
    result = runner.invoke(cli, ["reduce", "--stage", stage, formula])
    assert result.exit_code == 0
    assert result.output == expected + "\n"


def test_valid_and_sat(runner):
    result = runner.invoke(cli, ["valid", "[X p] X p"])
    assert (result.exit_code, result.output) == (0, "VALID\n")
    result = runner.invoke(cli, ["valid", "box X p | box X ~p"])
    assert result.exit_code == 1
    assert result.output.startswith("INVALID\npoint: timeline ")
    result = runner.invoke(cli, ["sat", "p & ~p"])
    assert (result.exit_code, result.output) == (1, "UNSAT\n")
    result = runner.invoke(cli, ["sat", "dia p & dia ~p"])
    assert result.exit_code == 0
    assert result.output.startswith("SAT\n")


def test_valid_json_and_trace(runner):
    result = runner.invoke(cli, ["--format", "json", "valid", "p -> box p"])
    payload = json.loads(result.output)
    assert payload["verdict"] == "INVALID"
    assert payload["witness"]["point"]["instant"] == 1
    result = runner.invoke(cli, ["--trace", "valid", "[X p] X p"])
    assert result.output.splitlines()[0].startswith("kappa: ")
    assert result.output.splitlines()[-1] == "VALID"


def test_countermodel_files(runner, tmp_path):
    out = tmp_path / "cm"
    result = runner.invoke(cli, ["valid", "--out", str(out), "box Y X X p -> box X p"])
    assert result.exit_code == 1
    assert sorted(p.name for p in out.iterdir()) == ["context.json", "model.json", "point.json"]
    point = json.loads((out / "point.json").read_text())
    replay = runner.invoke(cli, [
        "eval", "--model", str(out / "model.json"), "--context", str(out / "context.json"),
        "--leaf", point["leaf"], "--instant", str(point["instant"]), "box Y X X p -> box X p",
    ])
    assert (replay.exit_code, replay.output) == (1, "false\n")


def test_save_writes_under_countermodel_dir(runner, tmp_path, monkeypatch):
    target = tmp_path / "saved"
    monkeypatch.setattr(settings, "COUNTERMODEL_DIR", str(target))
    result = runner.invoke(cli, ["valid", "[X p] X p", "--save"])
    assert result.exit_code == 0
    assert not target.exists()
    result = runner.invoke(cli, ["sat", "--save", "dia p & dia ~p"])
    assert result.exit_code == 0
    assert sorted(p.name for p in target.iterdir()) == ["context.json", "model.json", "point.json"]


def test_deterministic_runs_are_identical(runner):
    args = ["--deterministic", "--format", "json", "valid", "(box p & ~q) | dia X q | [X q] p"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.output == second.output


def test_oracle(runner):
    result = runner.invoke(cli, ["oracle", "--max-depth", "1", "box X p | box X ~p"])
    assert result.exit_code == 1
    assert result.output.startswith("counterexample\n")
    result = runner.invoke(cli, ["oracle", "--max-depth", "1", "--context-mode", "empty", "X p | X ~p"])
    assert (result.exit_code, result.output) == (0, "no counterexample\n")


def test_proof_check(runner, tmp_path):
    result = runner.invoke(cli, ["proof", "check", str(CORPUS / "proofs" / "lavenham-6.json")])
    assert (result.exit_code, result.output) == (0, "ok\n")
    doc = json.loads((CORPUS / "proofs" / "axiom5.json").read_text())
    doc["lines"][0]["formula"] = "box X p -> X q"
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    result = runner.invoke(cli, ["proof", "check", str(broken)])
    assert result.exit_code == 1
    assert result.output.startswith("error at line 1: BadSchema: ")


@pytest.mark.parametrize("name, count", [("tiger", 9), ("figures", 16)])
def test_corpus_demos(runner, name, count):
    result = runner.invoke(cli, ["demo", name])
    assert result.exit_code == 0
    assert result.output.startswith(f"== {name}\n")
    assert result.output.endswith(f"{count}/{count} agreements\n")
    assert "MISMATCH" not in result.output


@pytest.mark.parametrize("name, count", [("lavenham", 9), ("errata", 5)])
def test_decision_demos(runner, name, count):
    result = runner.invoke(cli, ["demo", name])
    assert result.exit_code == 0, result.output
    assert result.output.endswith(f"{count}/{count} agreements\n")


def test_errata_reports_oracle_bounds(runner):
    result = runner.invoke(cli, ["demo", "errata"])
    lines = result.output.splitlines()
    shared = next(k for k, x in enumerate(lines) if x.startswith("ok shared-root core: "))
    assert lines[shared].endswith(": UNSAT (oracle: UNSAT) [expected UNSAT]")
    assert lines[shared + 1] == "   note: oracle bounds: depth 3, branch 2, contexts subsets"


def test_lavenham_premise_5_is_reported(runner):
    result = runner.invoke(cli, ["demo", "lavenham"])
    line = next(x for x in result.output.splitlines() if x.startswith("ok 5: "))
    assert line == "ok 5: box Y X X p -> box X p: INVALID (oracle: INVALID)"


def test_corpus(runner):
    result = runner.invoke(cli, ["corpus"])
    assert result.exit_code == 0
    assert result.output.endswith("23/23 agreements\n")
    result = runner.invoke(cli, ["--format", "json", "corpus", "--dir", str(CORPUS)])
    assert json.loads(result.output)["name"] == "corpus"


@pytest.mark.parametrize("args", [
    ["parse", "p &"],
    ["valid", "[[p] q] r"],
    ["eval", *TIGER, "--leaf", "w1_5", "--instant", "0", "X X p"],
    ["eval", *TIGER, "--leaf", "w1_1", "--instant", "0", "p"],
])
def test_reasoning_errors_exit_3(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 3
    assert "error: " in result.output


@pytest.mark.parametrize("args", [
    ["frobnicate"],
    ["eval", "p"],
    ["reduce", "--stage", "nu", "p"],
])
def test_usage_errors_exit_2(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_run_returns_exit_codes():
    assert run(["parse", "p"]) == 0
    assert run(["sat", "p & ~p"]) == 1
    assert run(["frobnicate"]) == 2
    assert run(["parse", "p &"]) == 3
