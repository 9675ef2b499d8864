from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings
from scipy.optimize import linprog

REPO_ROOT = Path(__file__).resolve().parents[2]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.engine.errors import LpError, PreconditionError
from src.engine.gap import example1, mlrp_b4, sop_tight
from src.engine.lp import (
    LpConstraint,
    LpProblem,
    LpStatus,
    Relation,
    at_cost_contract,
    implementable,
    min_payment,
    min_payment_linear,
    min_payment_problem,
    optimal_single,
    replication_certificate,
    simplex_solve,
)
from src.engine.model import Instance, SolveStatus, agent_utility, subinstance, verify_replication
from src.tests.oracles import min_payment_by_vertices, small_instances


def test_simplex_small_minimization() -> None:
    # min x + y  s.t.  x + 2y >= 2,  3x + y >= 3
    problem = LpProblem.of(
        [1, 1],
        [LpConstraint.of([1, 2], ">=", 2), LpConstraint.of([3, 1], ">=", 3)],
    )
    solution = simplex_solve(problem)
    assert solution.status == LpStatus.OPTIMAL
    assert solution.value == Fraction(7, 5)
    assert solution.assignment == (Fraction(4, 5), Fraction(3, 5))


def test_simplex_equalities_and_lower_bounds() -> None:
    problem = LpProblem.of(
        [2, 1],
        [LpConstraint.of([1, 1], "=", 5)],
        lower_bounds=[1, 0],
    )
    solution = simplex_solve(problem)
    assert solution.value == 6
    assert solution.assignment == (1, 4)


def test_simplex_reports_infeasible_and_unbounded() -> None:
    infeasible = LpProblem.of([1], [LpConstraint.of([1], "<=", -1)])
    assert simplex_solve(infeasible).status == LpStatus.INFEASIBLE
    unbounded = LpProblem.of([-1], [LpConstraint.of([1], ">=", 1)])
    assert simplex_solve(unbounded).status == LpStatus.UNBOUNDED


def test_lp_shape_errors() -> None:
    with pytest.raises(LpError):
        LpProblem(objective=())
    with pytest.raises(LpError):
        LpProblem.of([1, 1], [LpConstraint.of([1], Relation.GE, 0)])


def test_example_single_contract_earns_two() -> None:
    inst = example1().instance
    result = optimal_single(inst)
    assert result.status == SolveStatus.OPTIMAL
    assert result.principal_utility == 2
    assert result.action == 0
    assert result.certificate.passed


def test_example_costly_action_is_not_implementable() -> None:
    inst = example1().instance
    assert min_payment(inst, 0).payment == 0
    target = 2
    assert implementable(inst, target) == min_payment(inst, target).feasible
    if not implementable(inst, target):
        weights = replication_certificate(inst, target)
        assert weights is not None
        assert verify_replication(inst, target, weights)


def test_mlrp_fixture_single_optimum() -> None:
    fixture = mlrp_b4()
    result = optimal_single(fixture.instance)
    assert result.principal_utility == fixture.reference["single_utility"]
    assert result.action + 1 == fixture.reference["single_action"]
    assert result.expected_payment == Fraction(22, 10)


def test_sop_tight_single_payment_bound() -> None:
    fixture = sop_tight()
    inst = fixture.instance
    target = inst.action_origin.index(fixture.reference["target_action"] - 1)
    best = min_payment(inst, target)
    assert best.feasible
    assert best.payment == fixture.reference["single_payment_lower_bound"]


def test_at_cost_contract_for_min_cost_action() -> None:
    inst = Instance.build([1, 3], [0, 2], [["1/2", "1/2"], [0, 1]])
    t = at_cost_contract(inst, 0)
    assert t.payments == (1, 1)
    with pytest.raises(PreconditionError):
        at_cost_contract(inst, 1)


def test_linear_contract_payment() -> None:
    inst = Instance.build([0, 1], [0, 4], [[1, 0], ["1/2", "1/2"]])
    linear = min_payment_linear(inst, 1)
    assert linear.status == SolveStatus.OPTIMAL
    # alpha * R_1 - 1 >= alpha * R_0 with R = (0, 2)
    assert linear.alpha == Fraction(1, 2)
    assert linear.payment == 1
    assert linear.contract.payments == (0, 2)


def test_monotone_constraints_are_enforced() -> None:
    inst = Instance.build([0, 1], [0, 1, 2], [[0, 1, 0], ["1/2", 0, "1/2"]])
    free = min_payment(inst, 1)
    monotone = min_payment(inst, 1, monotone=True)
    assert monotone.feasible
    assert all(a <= b for a, b in zip(monotone.contract.payments, monotone.contract.payments[1:]))
    assert monotone.payment >= free.payment


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_instances(max_actions=4, max_outcomes=4))
def test_min_payment_matches_vertex_enumeration(inst: Instance) -> None:
    for i in range(inst.n):
        expected = min_payment_by_vertices(inst, i)
        got = min_payment(inst, i)
        if expected is None:
            assert not got.feasible
        else:
            assert got.feasible
            assert got.payment == expected


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_instances(max_actions=5, max_outcomes=5))
def test_min_payment_agrees_with_floating_point_solver(inst: Instance) -> None:
    for i in range(inst.n):
        problem = min_payment_problem(inst, i)
        # scipy wants A_ub x <= b_ub
        a_ub = [[-float(a) for a in con.coeffs] for con in problem.constraints]
        b_ub = [-float(con.rhs) for con in problem.constraints]
        reference = linprog(
            [float(c) for c in problem.objective], A_ub=a_ub, b_ub=b_ub,
            bounds=[(0, None)] * inst.m, method="highs",
        )
        got = min_payment(inst, i)
        if reference.status == 2:
            assert not got.feasible
        else:
            assert got.feasible
            assert float(got.payment) == pytest.approx(reference.fun, abs=1e-7)


@settings(max_examples=40, deadline=None)
@given(small_instances())
def test_optimal_single_contract_is_a_best_response(inst: Instance) -> None:
    result = optimal_single(inst)
    assert result.ok
    t = result.contracts.contracts[0]
    own = agent_utility(inst, result.action, t)
    assert all(agent_utility(inst, k, t) <= own for k in range(inst.n))
    assert own >= 0
    assert result.certificate.passed


def _payment_or_none(inst: Instance, i: int, monotone: bool = False) -> Fraction | None:
    best = min_payment(inst, i, monotone)
    return best.payment if best.feasible else None


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_instances(max_actions=5, max_outcomes=4))
def test_adding_an_action_never_lowers_min_payment(inst: Instance) -> None:
    # the last action in cost order plays the newcomer
    smaller = subinstance(inst, range(inst.n - 1))
    for i in range(smaller.n):
        before = _payment_or_none(smaller, i)
        after = _payment_or_none(inst, i)
        if after is not None:
            assert before is not None
            assert after >= before


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_instances(max_actions=5, max_outcomes=4))
def test_monotone_min_payment_is_never_cheaper(inst: Instance) -> None:
    for i in range(inst.n):
        free = _payment_or_none(inst, i)
        monotone = _payment_or_none(inst, i, monotone=True)
        if monotone is not None:
            assert free is not None
            assert monotone >= free
