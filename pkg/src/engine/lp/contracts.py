"""
Single-contract problems as exact LPs: minimum payment per action,
implementability, at-cost contracts for min-cost actions and the overall
optimal single contract.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from joblib import Parallel, delayed

from src.engine.ambiguous.validator import validate
from src.engine.errors import PreconditionError
from src.engine.lp.simplex import LpConstraint, LpProblem, Relation, simplex_solve
from src.engine.model import (
    AmbiguousContract,
    Contract,
    Instance,
    SolveResult,
    SolveStatus,
    check_action,
    expected_reward,
    fraction_text,
)
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class MinPayment:
    action: int
    status: SolveStatus
    payment: Fraction | None = None
    contract: Contract | None = None

    @property
    def feasible(self) -> bool:
        return self.status == SolveStatus.OPTIMAL


def min_payment_problem(inst: Instance, i: int, monotone: bool = False) -> LpProblem:
    """IC against every other action, IR, limited liability, optional monotonicity."""
    check_action(inst, i)
    p = inst.probs[i]
    constraints = []
    for k in range(inst.n):
        if k == i:
            continue
        coeffs = [a - b for a, b in zip(p, inst.probs[k])]
        constraints.append(LpConstraint(tuple(coeffs), Relation.GE, inst.costs[i] - inst.costs[k]))
    constraints.append(LpConstraint(p, Relation.GE, inst.costs[i]))
    if monotone:
        for j in range(inst.m - 1):
            coeffs = [Fraction(0)] * inst.m
            coeffs[j], coeffs[j + 1] = Fraction(1), Fraction(-1)
            constraints.append(LpConstraint(tuple(coeffs), Relation.LE, Fraction(0)))
    return LpProblem(objective=p, constraints=tuple(constraints))


def min_payment(inst: Instance, i: int, monotone: bool = False) -> MinPayment:
    solution = simplex_solve(min_payment_problem(inst, i, monotone))
    if not solution.optimal:
        logger.debug("action %s not implementable (monotone=%s)", inst.label(i), monotone)
        return MinPayment(i, SolveStatus.INFEASIBLE)
    return MinPayment(i, SolveStatus.OPTIMAL, solution.value, Contract(solution.assignment))


def min_payments(inst: Instance, monotone: bool = False, threads: int = 1) -> list[MinPayment]:
    """min_payment for every action, optionally on a thread pool."""
    if threads > 1 and inst.n > 1:
        return Parallel(n_jobs=threads, prefer="threads")(
            delayed(min_payment)(inst, i, monotone) for i in range(inst.n)
        )
    return [min_payment(inst, i, monotone) for i in range(inst.n)]


def implementable(inst: Instance, i: int) -> bool:
    return min_payment(inst, i).feasible


def at_cost_contract(inst: Instance, i: int) -> Contract:
    """Pay c_i on the support of a min-cost action i and nothing elsewhere."""
    check_action(inst, i)
    if inst.costs[i] != min(inst.costs):
        raise PreconditionError(
            f"action {inst.label(i)} costs {fraction_text(inst.costs[i])}, not the minimum"
        )
    c = inst.costs[i]
    return Contract(tuple(c if p > 0 else Fraction(0) for p in inst.probs[i]))


def optimal_single(inst: Instance, monotone: bool = False, threads: int = 1) -> SolveResult:
    """Best single contract: max U_P, then smaller payment, then smaller index."""
    candidates = [mp for mp in min_payments(inst, monotone, threads) if mp.feasible]
    if not candidates:
        return SolveResult.unavailable(SolveStatus.INFEASIBLE)
    best = max(
        candidates,
        key=lambda mp: (expected_reward(inst, mp.action) - mp.payment, -mp.payment, -mp.action),
    )
    tau = AmbiguousContract.single(best.contract)
    logger.debug(
        "optimal single contract: action %s, payment %s",
        inst.label(best.action), fraction_text(best.payment),
    )
    return SolveResult.from_contracts(inst, best.action, tau, validate(inst, tau, best.action))


def replication_certificate(inst: Instance, i: int) -> dict[int, Fraction] | None:
    """
    Cheapest convex combination of the other actions that reproduces p_i.

    Returns the positive weights when that combination is strictly cheaper
    than c_i (i is then not implementable), otherwise None.
    """
    check_action(inst, i)
    others = [k for k in range(inst.n) if k != i]
    if not others:
        return None
    constraints = [
        LpConstraint(tuple(inst.probs[k][j] for k in others), Relation.EQ, inst.probs[i][j])
        for j in range(inst.m)
    ]
    constraints.append(LpConstraint(tuple(Fraction(1) for _ in others), Relation.EQ, Fraction(1)))
    problem = LpProblem(objective=tuple(inst.costs[k] for k in others), constraints=tuple(constraints))
    solution = simplex_solve(problem)
    if not solution.optimal or solution.value >= inst.costs[i]:
        return None
    return {k: w for k, w in zip(others, solution.assignment) if w > 0}


@dataclass(frozen=True)
class LinearPayment:
    action: int
    status: SolveStatus
    payment: Fraction | None = None
    alpha: Fraction | None = None
    contract: Contract | None = None


def min_payment_linear(inst: Instance, i: int) -> LinearPayment:
    """Cheapest contract of the form t_j = alpha * r_j that incentivizes i."""
    check_action(inst, i)
    rewards = [expected_reward(inst, k) for k in range(inst.n)]
    constraints = [
        LpConstraint((rewards[i] - rewards[k],), Relation.GE, inst.costs[i] - inst.costs[k])
        for k in range(inst.n)
        if k != i
    ]
    constraints.append(LpConstraint((rewards[i],), Relation.GE, inst.costs[i]))
    solution = simplex_solve(LpProblem(objective=(rewards[i],), constraints=tuple(constraints)))
    if not solution.optimal:
        return LinearPayment(i, SolveStatus.INFEASIBLE)
    alpha = solution.assignment[0]
    return LinearPayment(
        i,
        SolveStatus.OPTIMAL,
        solution.value,
        alpha,
        Contract(tuple(alpha * r for r in inst.rewards)),
    )
