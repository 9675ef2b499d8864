from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[2]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.engine.errors import ContractError, DocumentError, InstanceError
from src.engine.gap import example1, mlrp_b4
from src.engine.manipulability import CurveFamily
from src.parser import ClassSpecParser, InstanceParser, TauParser, emit_instance, parse_instance
from src.schemas import InstanceDocument, TauDocument
from src.utils.io.file_ops import read_json


def test_single_action_single_outcome() -> None:
    inst = parse_instance({"costs": [0], "rewards": ["0.25"], "probs": [[1]]})
    assert inst.n == 1 and inst.m == 1
    assert inst.rewards == (Fraction(1, 4),)


def test_floats_and_ratio_strings_are_exact() -> None:
    inst = parse_instance({"costs": [0.1], "rewards": [0, "3/2"], "probs": [["0.3", 0.7]]})
    assert inst.costs == (Fraction(1, 10),)
    assert inst.probs[0] == (Fraction(3, 10), Fraction(7, 10))


def test_row_sum_error_names_the_exact_sum() -> None:
    with pytest.raises(InstanceError, match="sums to 99/100"):
        parse_instance({"costs": [0], "rewards": [0, 1], "probs": [["0.5", "0.49"]]})


@pytest.mark.parametrize(
    "data",
    [
        {"costs": [0, 1], "rewards": [0, 1], "probs": [[1, 0], [1]]},
        {"costs": [0], "rewards": [0], "probs": [[1]], "weights": [1]},
        {"costs": [], "rewards": [0], "probs": []},
        {"costs": ["x"], "rewards": [0], "probs": [[1]]},
        {"costs": [0], "rewards": [0], "probs": [[1]], "action_labels": ["a", "b"]},
    ],
)
def test_malformed_documents_raise_document_error(data) -> None:
    with pytest.raises(DocumentError):
        parse_instance(data)


@pytest.mark.parametrize("fixture", [example1, mlrp_b4])
def test_emitted_instances_parse_back(fixture) -> None:
    inst = fixture().instance
    emitted = emit_instance(inst)
    assert parse_instance(emitted) == inst
    assert all(isinstance(v, str) for v in emitted["costs"])


def test_emit_restores_caller_order() -> None:
    data = {"costs": [2, 0], "rewards": [4, 0], "probs": [[0, 1], ["1/4", "3/4"]]}
    emitted = emit_instance(parse_instance(data))
    assert emitted["costs"] == ["2", "0"]
    assert emitted["rewards"] == ["4", "0"]
    assert emitted["probs"] == [["0", "1"], ["1/4", "3/4"]]
    assert emitted["action_labels"] == ["a1", "a2"]


def test_tau_payments_follow_reward_order() -> None:
    inst = parse_instance({"costs": [0], "rewards": [4, 0, 8], "probs": [["1/2", "1/2", 0]]})
    doc = TauDocument(contracts=[[2, 0, 0]])
    tau = doc.to_ambiguous(inst)
    assert tau.contracts[0].payments == (0, 2, 0)
    assert TauDocument.emit(inst, tau) == [["2", "0", "0"]]


def test_tau_length_mismatch() -> None:
    inst = example1().instance
    with pytest.raises(ContractError):
        TauDocument(contracts=[[1, 2]]).to_ambiguous(inst)
    with pytest.raises(DocumentError):
        TauParser().parse_data({"contracts": []})


def test_tau_parser_loads_inline_documents() -> None:
    inst = example1().instance
    tau = TauParser().load_for('{"contracts": [[0, 2, 0], [0, 0, 4]]}', inst)
    assert len(tau) == 2


def test_class_spec_documents() -> None:
    parser = ClassSpecParser()
    with pytest.raises(DocumentError, match="degree"):
        parser.parse_data({"kind": "power"})
    with pytest.raises(DocumentError):
        parser.parse_data({"kind": "polynomial"})
    spec = parser.parse_data({"kind": "power", "degree": 2})
    assert isinstance(spec.to_curves(), CurveFamily)
    spec = parser.parse_data({"kind": "polynomial", "curves": [[0, 0, 1], [0, 0, 0, 0, 1]], "grid": ["1/2", 2]})
    assert len(spec.to_curves()) == 2
    assert spec.grid == [Fraction(1, 2), Fraction(2)]


def test_instance_files_and_inline_text(tmp_path: Path) -> None:
    doc = InstanceDocument.from_instance(example1().instance).emit()
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    parser = InstanceParser()
    assert parser.load(str(path)) == example1().instance
    assert parser.load(json.dumps(doc)) == example1().instance

    with pytest.raises(DocumentError, match="invalid JSON"):
        parser.load("{not json")
    with pytest.raises(DocumentError, match="file not found"):
        read_json(tmp_path / "missing.json")
