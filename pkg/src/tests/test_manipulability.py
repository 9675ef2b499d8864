from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[2]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.engine.errors import ContractError, PreconditionError
from src.engine.lp import implementable
from src.engine.manipulability import (
    ContractCurve,
    CurveFamily,
    NpcVerdict,
    analyze_builtin_classes,
    build_witness,
    crossing_points,
    evaluate_polynomial,
    npc_check,
    q_from_gaps,
    sop_as_polynomial,
    witness_from_crossing,
)
from src.engine.model import expected_payment

SQUARE = ContractCurve.polynomial([0, 0, 1])
QUARTIC = ContractCurve.polynomial([0, 0, 0, 0, 1])


def test_curve_evaluation() -> None:
    assert ContractCurve.linear("1/2")(4) == 2
    assert ContractCurve.power(3, 2)(2) == 12
    assert QUARTIC(Fraction(1, 2)) == Fraction(1, 16)
    table = ContractCurve.table([(0, 0), (4, 2)])
    assert table(4) == 2
    with pytest.raises(PreconditionError):
        table(3)
    assert evaluate_polynomial((1, 2, 3), Fraction(2)) == 17


def test_curve_validation() -> None:
    with pytest.raises(ContractError):
        ContractCurve.polynomial([1, -1])
    with pytest.raises(ContractError):
        ContractCurve.table([(1, 1), (1, 2)])
    with pytest.raises(ContractError):
        ContractCurve.power(1, -1)


def test_single_parameter_families_hold_analytically() -> None:
    assert npc_check(CurveFamily.linear()).verdict == NpcVerdict.HOLDS_ANALYTICALLY
    assert npc_check(CurveFamily.power(3)).verdict == NpcVerdict.HOLDS_ANALYTICALLY
    curves = [ContractCurve.power(a, 2) for a in (1, 2, 5)]
    assert npc_check(curves).verdict == NpcVerdict.HOLDS_ANALYTICALLY


def test_polynomials_cross_between_one_half_and_two() -> None:
    assert crossing_points(SQUARE, QUARTIC, [Fraction(1, 2), 1, 2]) == (Fraction(1, 2), Fraction(2))
    result = npc_check([SQUARE, QUARTIC], [0, Fraction(1, 2), 2])
    assert result.verdict == NpcVerdict.VIOLATED
    assert result.pair == (0, 1)
    # both curves agree on {0, 1}
    assert npc_check([SQUARE, QUARTIC], [0, 1]).verdict == NpcVerdict.HOLDS_ON_GRID
    with pytest.raises(PreconditionError):
        npc_check([SQUARE, QUARTIC])


def test_q_from_gaps_balances_the_pair() -> None:
    q1, q2 = q_from_gaps(Fraction(3, 16), -12)
    assert (q1, q2) == (Fraction(64, 65), Fraction(1, 65))
    assert q1 * Fraction(3, 16) + q2 * -12 == 0
    with pytest.raises(PreconditionError):
        q_from_gaps(1, 1)


def test_polynomial_witness_has_cost_four_thirteenths() -> None:
    witness = witness_from_crossing(SQUARE, QUARTIC, [Fraction(1, 2), 2])
    assert witness is not None
    inst = witness.instance
    assert witness.target_cost == Fraction(4, 13)
    assert witness.q == (Fraction(64, 65), Fraction(1, 65))
    assert not implementable(inst, witness.target)
    for t in witness.tau:
        assert expected_payment(inst, witness.target, t) == witness.target_cost


def test_table_witness_on_three_rewards() -> None:
    rewards = [0, 4, 8]
    flat = ContractCurve.table(list(zip(rewards, (0, 2, 2))))
    steep = ContractCurve.table(list(zip(rewards, (0, 0, 4))))
    witness = witness_from_crossing(flat, steep, rewards, rewards)
    assert witness.q == (0, Fraction(1, 2), Fraction(1, 2))
    assert witness.target_cost == 2
    with pytest.raises(PreconditionError):
        witness_from_crossing(flat, steep, rewards, [0, 4])


def test_no_witness_without_a_crossing() -> None:
    assert witness_from_crossing(ContractCurve.linear(1), ContractCurve.linear(2), [0, 1, 2]) is None


def test_build_witness_rejects_unbalanced_weights() -> None:
    with pytest.raises(PreconditionError):
        build_witness(SQUARE, QUARTIC, [Fraction(1, 2), 2], [Fraction(1, 2), Fraction(1, 2)])


def test_sop_as_polynomial_pays_only_at_its_reward() -> None:
    rewards = [0, 1, 2]
    coefficients = sop_as_polynomial(1, 3, rewards)
    values = [evaluate_polynomial(coefficients, Fraction(x)) for x in rewards]
    assert values == [0, 3, 0]
    assert evaluate_polynomial(coefficients, Fraction(5)) >= 0


def test_builtin_class_table() -> None:
    rows = {row.name: row for row in analyze_builtin_classes([0, 1, 3])}
    assert set(rows) == {"linear", "power-2", "polynomial", "monotone", "all-contracts"}
    assert not rows["linear"].manipulable
    assert not rows["power-2"].manipulable
    assert rows["polynomial"].manipulable
    assert rows["polynomial"].witness.target_cost == Fraction(4, 13)
    assert rows["monotone"].manipulable
    assert rows["monotone"].ratio > 3
    assert rows["all-contracts"].ratio == Fraction(3, 2)
