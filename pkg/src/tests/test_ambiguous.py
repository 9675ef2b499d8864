from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, assume, given, settings

REPO_ROOT = Path(__file__).resolve().parents[2]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.engine.ambiguous import (
    compress_to_sop,
    compress_to_step,
    cumulatively_dominated,
    minimal_sop_support,
    optimal_ambiguous,
    per_action_results,
    solve_for_action,
    solve_general_for_action,
    solve_mlrp,
    solve_mlrp_for_action,
    solve_mlrp_monotone_for_action,
    solve_monotone_for_action,
    support_scan,
    validate,
)
from src.engine.errors import PreconditionError
from src.engine.gap import example1, mlrp_b4, monotone_omega, sop_tight
from src.engine.lp import min_payment, optimal_single
from src.engine.model import (
    AmbiguousContract,
    CheckStatus,
    Contract,
    Instance,
    SolveStatus,
    expected_payment,
    has_distinct_rows,
    is_mlrp,
    is_monotone,
    is_sop,
    is_step,
)
from src.tests.oracles import cheaper_sop_level, mlrp_instances, small_instances, sop_family_works


def test_example_pair_of_contracts_earns_three() -> None:
    inst = example1().instance
    result = optimal_ambiguous(inst)
    assert result.status == SolveStatus.OPTIMAL
    assert result.action == 2
    assert result.expected_payment == 1
    assert result.principal_utility == 3
    assert result.agent_utility == 0
    assert result.contracts.text() == [["0", "2", "0"], ["0", "0", "4"]]
    assert result.certificate.passed
    assert result.water_level.theta == 1


def test_validator_itemizes_consistency_ic_and_ir() -> None:
    inst = example1().instance
    tau = AmbiguousContract.of([[0, 2, 0], [0, 0, 4]])
    certificate = validate(inst, tau, 2)
    assert certificate.passed
    assert certificate.item("consistency").status == CheckStatus.PASS
    assert certificate.item("ir").status == CheckStatus.PASS
    assert certificate.item("ic:a1").status == CheckStatus.PASS

    lopsided = AmbiguousContract.of([[0, 2, 0], [0, 0, 8]])
    failed = validate(inst, lopsided, 2)
    assert not failed.passed
    assert failed.item("consistency").status == CheckStatus.FAIL


def test_validator_warns_when_the_agent_would_pick_a_tied_action() -> None:
    inst = Instance.build([0, 0], [1, 1], [[1, 0], [0, 1]])
    certificate = validate(inst, AmbiguousContract.single(Contract.zero(2)), 1)
    assert certificate.passed
    assert certificate.item("tie_break").status == CheckStatus.WARN


def test_mlrp_fixture_matches_reference_values() -> None:
    fixture = mlrp_b4()
    inst, ref = fixture.instance, fixture.reference
    scan = support_scan(inst)
    assert [j + 1 for j in scan.low] == ref["low"]
    assert [j + 1 for j in scan.high] == ref["high"]

    general = optimal_ambiguous(inst)
    fast = solve_mlrp(inst)
    for result in (general, fast):
        assert result.principal_utility == ref["ambiguous_utility"]
        assert result.action + 1 == ref["ambiguous_action"]
        assert result.expected_payment == 2
    assert [list(t.payments) for t in fast.contracts] == ref["tau"]
    # infinite-ratio ties go to the first outcome a cheaper action misses
    assert general.water_level.chosen_outcomes == (2, 3, 4)
    assert general.contracts.text()[1] == ["0", "0", "0", "40/7", "0", "0"]


def test_mlrp_monotone_fixture_step_pair() -> None:
    inst = mlrp_b4().instance
    fast = solve_mlrp_monotone_for_action(inst, 2)
    assert fast.contracts.text() == [["0", "0", "2", "2", "2", "2"], ["0", "0", "0", "0", "0", "20"]]
    general = solve_monotone_for_action(inst, 2)
    assert general.expected_payment == fast.expected_payment == 2


def test_mlrp_fast_path_refuses_non_mlrp_instances() -> None:
    with pytest.raises(PreconditionError, match="MLRP"):
        solve_mlrp_for_action(example1().instance, 2)


def test_monotone_omega_step_pair() -> None:
    fixture = monotone_omega()
    inst, ref = fixture.instance, fixture.reference
    ambiguous = optimal_ambiguous(inst, monotone=True)
    assert ambiguous.ok
    assert ambiguous.action + 1 == ref["ambiguous_action"]
    assert ambiguous.principal_utility >= ref["ambiguous_lower_bound"]
    assert [list(t.payments) for t in ambiguous.contracts] == ref["tau"]
    assert all(is_step(t) for t in ambiguous.contracts)

    single = optimal_single(inst, monotone=True)
    assert single.ok
    assert single.principal_utility <= ref["single_upper_bound"]
    assert ambiguous.principal_utility / single.principal_utility > 3


def test_cumulative_domination_blocks_monotone_implementation() -> None:
    # the costly action shifts mass down, so no monotone contract can favor it
    inst = Instance.build([0, 1], [0, 1], [[0, 1], ["1/2", "1/2"]])
    assert cumulatively_dominated(inst, 1, 0)
    result = solve_monotone_for_action(inst, 1)
    assert result.status == SolveStatus.NOT_MONOTONE_IMPLEMENTABLE
    general = solve_general_for_action(inst, 1)
    assert general.ok


def test_sop_tight_needs_every_outcome() -> None:
    fixture = sop_tight()
    inst = fixture.instance
    target = inst.action_origin.index(fixture.reference["target_action"] - 1)
    result = solve_general_for_action(inst, target)
    assert result.expected_payment == fixture.reference["target_cost"]
    assert len(result.contracts) == fixture.reference["min_sop_support"]
    support = minimal_sop_support(inst, target, result.expected_payment)
    assert support is not None
    assert len(support) == fixture.reference["min_sop_support"]


def test_compression_keeps_target_and_payment() -> None:
    fixture = monotone_omega()
    inst = fixture.instance
    target = fixture.reference["ambiguous_action"] - 1
    tau = AmbiguousContract.of(fixture.reference["tau"])
    as_sop = compress_to_sop(inst, tau, target)
    as_step = compress_to_step(inst, tau, target)
    assert all(is_sop(t) for t in as_sop)
    assert all(is_step(t) for t in as_step)
    for family in (as_sop, as_step):
        assert validate(inst, family, target).passed


def test_compression_rejects_a_contract_that_does_not_incentivize() -> None:
    inst = example1().instance
    with pytest.raises(PreconditionError):
        compress_to_sop(inst, AmbiguousContract.single(Contract.zero(3)), 2)


def test_duplicate_rows_are_dropped_and_results_lifted_back() -> None:
    base = example1().instance
    costs, rewards, probs, _, _ = base.original_order()
    inst = Instance.build(costs + [2], rewards, probs + [probs[2]])
    assert not has_distinct_rows(inst)
    result = optimal_ambiguous(inst)
    assert result.action == 2
    assert result.principal_utility == 3
    results = per_action_results(inst)
    assert results[3] is None
    with pytest.raises(PreconditionError):
        solve_for_action(inst, 3)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_instances(max_actions=5, max_outcomes=5))
def test_no_cheaper_sop_level_exists(inst: Instance) -> None:
    assume(has_distinct_rows(inst))
    for i in range(inst.n):
        result = solve_general_for_action(inst, i)
        assert result.ok
        theta = result.water_level.theta
        assert result.expected_payment == theta
        assert sop_family_works(inst, i, theta)
        assert cheaper_sop_level(inst, i, theta) is None
        assert result.certificate.passed
        assert all(is_sop(t) or all(x == 0 for x in t.payments) for t in result.contracts)
        assert len(result.contracts) <= min(inst.m, inst.n - 1)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_instances())
def test_ambiguity_never_hurts(inst: Instance) -> None:
    single = optimal_single(inst)
    ambiguous = optimal_ambiguous(inst)
    assert ambiguous.ok
    assert ambiguous.principal_utility >= single.principal_utility

    single_monotone = optimal_single(inst, monotone=True)
    ambiguous_monotone = optimal_ambiguous(inst, monotone=True)
    if single_monotone.ok:
        assert ambiguous_monotone.ok
        assert ambiguous_monotone.principal_utility >= single_monotone.principal_utility
    if ambiguous_monotone.ok:
        assert ambiguous.principal_utility >= ambiguous_monotone.principal_utility
        assert all(is_monotone(t) for t in ambiguous_monotone.contracts)
        assert ambiguous_monotone.certificate.passed


@settings(max_examples=40, deadline=None)
@given(small_instances())
def test_sop_compression_of_the_best_single_contract(inst: Instance) -> None:
    single = optimal_single(inst)
    assume(single.expected_payment > 0)
    compressed = compress_to_sop(inst, single.contracts, single.action)
    assert validate(inst, compressed, single.action).passed
    assert all(is_sop(t) for t in compressed)


def test_sop_ratio_ties_go_to_the_smallest_outcome() -> None:
    inst = Instance.build([0, 1], [0, 1, 2], [["1/2", "1/4", "1/4"], ["1/4", "3/8", "3/8"]])
    result = solve_general_for_action(inst, 1)
    assert result.water_level.chosen_outcomes == (1,)
    assert result.water_level.theta == 3
    assert result.contracts.text() == [["0", "8", "0"]]


def test_cumulative_ties_may_land_below_the_lowest_support_outcome() -> None:
    # tails of the cheap action are 1, 1/2, 1/2: thresholds 1 and 2 tie
    inst = Instance.build([0, 1], [0, 1, 5], [["1/2", 0, "1/2"], [0, 0, 1]])
    result = solve_monotone_for_action(inst, 1)
    assert result.water_level.chosen_outcomes == (1, 2)
    assert result.contracts.text() == [["0", "2", "2"], ["0", "0", "2"]]
    assert result.certificate.passed


def test_monotone_family_always_holds_the_base_step() -> None:
    inst = Instance.build([0, 1], [0, 1, 2], [["1/2", "1/2", 0], [0, "1/2", "1/2"]])
    result = solve_monotone_for_action(inst, 1)
    assert result.water_level.theta == 1
    assert set(result.contracts.contracts) == {Contract.step(3, 1, Fraction(1)), Contract.step(3, 2, Fraction(2))}
    compressed = compress_to_step(inst, result.contracts, 1)
    assert Contract.step(3, 1, Fraction(1)) in compressed.contracts


def test_certificate_reports_a_lost_tie_break() -> None:
    inst = Instance.build([0, 0], [1, 1], [[1, 0], [0, 1]])
    result = solve_general_for_action(inst, 1)
    assert result.certificate.passed
    assert result.certificate.tie_break_ok is False
    assert optimal_ambiguous(example1().instance).certificate.tie_break_ok is True


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(mlrp_instances())
def test_mlrp_fast_paths_agree_with_the_general_solvers(inst: Instance) -> None:
    assume(has_distinct_rows(inst))
    assert is_mlrp(inst).holds
    scan = support_scan(inst)
    for i in range(inst.n):
        fast = solve_mlrp_for_action(inst, i, scan)
        general = solve_general_for_action(inst, i)
        assert fast.expected_payment == general.expected_payment
        assert fast.principal_utility == general.principal_utility

        fast_step = solve_mlrp_monotone_for_action(inst, i, scan)
        general_step = solve_monotone_for_action(inst, i)
        assert general_step.ok
        assert fast_step.expected_payment == general_step.expected_payment


@settings(max_examples=100, deadline=None)
@given(mlrp_instances(max_actions=5))
def test_mlrp_supports_move_up_with_cost(inst: Instance) -> None:
    scan = support_scan(inst)
    assert list(scan.low) == sorted(scan.low)
    assert list(scan.high) == sorted(scan.high)
    for i in range(inst.n):
        low = scan.low[i]
        for k in range(inst.n):
            if inst.costs[i] < inst.costs[k]:
                assert inst.probs[k][low] <= inst.probs[i][low]


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_instances(max_actions=5, max_outcomes=5))
def test_compression_keeps_action_payment_and_size(inst: Instance) -> None:
    for monotone in (False, True):
        result = optimal_ambiguous(inst, monotone=monotone)
        if not result.ok:
            continue
        i, level = result.action, result.expected_payment
        as_sop = compress_to_sop(inst, result.contracts, i)
        assert len(as_sop) <= min(inst.m, inst.n - 1)
        families = [as_sop]
        if monotone:
            as_step = compress_to_step(inst, result.contracts, i)
            assert all(is_step(t) or not any(t.payments) for t in as_step)
            # one step per strictly cheaper action plus the base step
            assert len(as_step) <= min(inst.m, inst.n)
            families.append(as_step)
        for family in families:
            assert validate(inst, family, i).passed
            assert all(expected_payment(inst, i, t) == level for t in family)


@settings(max_examples=60, deadline=None)
@given(small_instances(max_actions=4, max_outcomes=4))
def test_monotone_single_contract_compresses_to_steps(inst: Instance) -> None:
    for i in range(inst.n):
        best = min_payment(inst, i, monotone=True)
        if not best.feasible or best.payment == 0:
            continue
        tau = AmbiguousContract.single(best.contract)
        as_step = compress_to_step(inst, tau, i)
        assert validate(inst, as_step, i).passed
        assert all(expected_payment(inst, i, t) == best.payment for t in as_step)
