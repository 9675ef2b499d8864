from __future__ import annotations

import io
import json
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[2]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.cli import EXIT_DOMAIN, EXIT_INPUT, EXIT_OK, main
from src.engine.gap import example1
from src.parser import emit_instance, parse_instance
from src.utils.io.file_ops import read_jsonl


def run(argv: list[str]) -> tuple[int, str]:
    out = io.StringIO()
    code = main(argv, stdout=out)
    return code, out.getvalue()


def run_json(argv: list[str]) -> tuple[int, dict]:
    code, text = run(argv)
    return code, json.loads(text)


@pytest.fixture
def example_file(tmp_path: Path) -> str:
    path = tmp_path / "example1.json"
    path.write_text(json.dumps(emit_instance(example1().instance)), encoding="utf-8")
    return str(path)


def test_solve_ambiguous(example_file: str) -> None:
    code, doc = run_json(["solve", example_file])
    assert code == EXIT_OK
    assert doc["status"] == "optimal"
    assert doc["action"] == 3
    assert doc["payment"] == "1"
    assert doc["principal_utility"] == "3"
    assert doc["contracts"] == [["0", "2", "0"], ["0", "0", "4"]]
    assert doc["certified"] is True
    assert doc["tie_break_ok"] is True
    assert doc["agent_choice"] == 3


def test_solve_single_and_fixed_action(example_file: str) -> None:
    code, doc = run_json(["solve", "--mode", "single", example_file])
    assert code == EXIT_OK
    assert doc["principal_utility"] == "2"

    code, doc = run_json(["solve", "--action", "3", example_file])
    assert doc["action"] == 3
    assert doc["payment"] == "1"

    code, doc = run_json(["solve", "--action", "9", example_file])
    assert code == EXIT_INPUT
    assert doc["kind"] == "input"


def test_gap_reports_first_best_only_on_request(example_file: str) -> None:
    code, doc = run_json(["gap", example_file])
    assert code == EXIT_OK
    assert doc["rho"] == "3/2"
    assert doc["rho_hat"] == "3/2"
    assert doc["rho_decimal"] == "1.5"
    assert "first_best" not in doc

    _, doc = run_json(["gap", "--first-best", example_file])
    assert doc["first_best"] == "3"
    assert doc["first_best_action"] == 3


def test_validate_given_contracts(example_file: str) -> None:
    tau = '{"contracts": [[0, 2, 0], [0, 0, 4]]}'
    code, doc = run_json(["validate", example_file, "--tau", tau, "--action", "3"])
    assert code == EXIT_OK
    assert doc["status"] == "pass"
    assert {item["name"] for item in doc["certificate"]} >= {"consistency", "ir"}

    code, doc = run_json(["validate", example_file, "--tau", '{"contracts": [[0, 2, 0]]}', "--action", "3"])
    assert code == EXIT_OK
    assert doc["status"] == "fail"


def test_solve_for_an_action_surfaces_a_lost_tie_break(tmp_path: Path) -> None:
    path = tmp_path / "tied.json"
    path.write_text(json.dumps({"costs": [0, 0], "rewards": [1, 1], "probs": [[1, 0], [0, 1]]}), encoding="utf-8")
    code, doc = run_json(["solve", "--action", "2", str(path)])
    assert code == EXIT_OK
    assert doc["certified"] is True
    assert doc["tie_break_ok"] is False
    assert doc["action"] == 2
    assert doc["agent_choice"] == 1


def test_input_errors_exit_with_two(tmp_path: Path) -> None:
    code, doc = run_json(["solve", str(tmp_path / "missing.json")])
    assert code == EXIT_INPUT
    assert doc["status"] == "failed"

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"costs": [0], "rewards": [0, 1], "probs": [["0.5", "0.49"]]}), encoding="utf-8")
    code, doc = run_json(["gap", str(bad)])
    assert code == EXIT_INPUT
    assert "99/100" in doc["error"]


def test_gen_named_and_parametrized_instances() -> None:
    code, doc = run_json(["gen", "example1"])
    assert code == EXIT_OK
    assert parse_instance(doc["instance"]) == example1().instance
    assert doc["reference"]["rho"] == "3/2"

    _, doc = run_json(["gen", "two_effort", "eps=1/10", "delta=1/2"])
    assert doc["reference"]["rho"] == "19/10"
    assert doc["params"] == {"eps": "1/10", "delta": "1/2"}


def test_gen_unbounded_with_checks() -> None:
    code, doc = run_json(["gen", "unbounded", "x=1", "delta=1/2", "checks=true"])
    assert code == EXIT_OK
    assert doc["params"]["attempts"] == 1
    assert doc["reference"]["claim_holds"] is True
    assert doc["reference"]["harmonic_failures"] == []
    assert doc["reference"]["target_cost"] == "1/2"


def test_gen_precondition_failures_exit_with_one() -> None:
    code, doc = run_json(["gen", "diagonal", "W=1"])
    assert code == EXIT_DOMAIN
    assert doc["kind"] == "domain"

    code, _ = run_json(["gen", "two_effort", "eps=1/2", "delta=1/3"])
    assert code == EXIT_DOMAIN


def test_check_class_polynomial_witness() -> None:
    spec = '{"kind": "polynomial", "curves": [[0, 0, 1], [0, 0, 0, 0, 1]], "grid": ["1/2", "2"]}'
    code, doc = run_json(["check-class", spec])
    assert code == EXIT_OK
    assert doc["verdict"] == "violated"
    assert doc["pair"] == [1, 2]
    assert doc["witness"]["target_cost"] == "4/13"
    assert doc["witness"]["q"] == ["64/65", "1/65"]


def test_check_class_builtin_table() -> None:
    code, doc = run_json(["check-class", '{"kind": "builtin"}'])
    assert code == EXIT_OK
    names = [row["name"] for row in doc["classes"]]
    assert len(names) == 5
    assert {"linear", "polynomial", "monotone"} <= set(names)


def test_probe_writes_one_record_per_trial_plus_reference(tmp_path: Path) -> None:
    out = tmp_path / "probe" / "records.jsonl"
    code, doc = run_json(["probe", "--trials", "3", "--seed", "11", "--out", str(out)])
    assert code == EXIT_OK
    assert doc["trials"] == 3
    assert doc["records_file"] == str(out)
    records = read_jsonl(out)
    assert len(records) == 4
    assert records[-1]["note"] == "reference"


def test_csv_output_holds_the_action_table(example_file: str) -> None:
    code, text = run(["solve", "--format", "csv", example_file])
    assert code == EXIT_OK
    header, *rows = text.strip().splitlines()
    assert header.startswith("action,")
    assert "single_payment" in header
    assert len(rows) == 3


def test_pretty_output(example_file: str) -> None:
    code, text = run(["gap", "--format", "pretty", example_file])
    assert code == EXIT_OK
    assert any(line.startswith("rho ") for line in text.splitlines())


def test_missing_config_file_is_an_input_error(tmp_path: Path, example_file: str) -> None:
    code, doc = run_json(["solve", "--config", str(tmp_path / "nope.yaml"), example_file])
    assert code == EXIT_INPUT
    assert doc["kind"] == "input"


def test_config_file_changes_output_format(tmp_path: Path, example_file: str) -> None:
    config_file = tmp_path / "solver.yaml"
    config_file.write_text("output:\n  format: csv\n", encoding="utf-8")
    code, text = run(["gap", "--config", str(config_file), example_file])
    assert code == EXIT_OK
    assert text.startswith("action,")
    # the next run without --config is back on the defaults
    _, text = run(["gap", example_file])
    assert json.loads(text)["rho"] == "3/2"


def test_output_is_deterministic(example_file: str) -> None:
    first = run(["solve", example_file])
    second = run(["solve", example_file])
    assert first == second
