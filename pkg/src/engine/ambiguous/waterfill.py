"""
Optimal ambiguous contracts by raising a common payment level.

For a target action i every contract in the answer pays i the same amount
theta. Each competing action i' forces theta up to the smallest level at
which some contract of the family makes i' no better than i; the family
holds one contract per distinct outcome chosen along the way.

- general: single outcome payment (SOP) contracts, one per chosen outcome.
- monotone: step contracts; an action that is cumulatively dominated by a
  cheaper one cannot be implemented by any monotone contract.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from joblib import Parallel, delayed

from src.engine.ambiguous.validator import validate
from src.engine.errors import InternalInconsistency, PreconditionError
from src.engine.model import (
    AmbiguousContract,
    Contract,
    ExtendedRatio,
    Instance,
    SolveResult,
    SolveStatus,
    check_action,
    fraction_text,
    has_distinct_rows,
)
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class WaterLevel:
    theta: Fraction
    binding_action: int | None
    chosen_outcomes: tuple[int, ...]


def sop_pivot(inst: Instance, i: int, k: int) -> int:
    """Outcome in supp(p_i) maximizing p_ij / p_kj; ties go to the smallest j."""
    best_j, best = None, None
    for j in inst.support(i):
        ratio = ExtendedRatio.of(inst.probs[i][j], inst.probs[k][j])
        if best is None or best < ratio:
            best_j, best = j, ratio
    return best_j


def sop_threshold(inst: Instance, i: int, k: int, j: int) -> Fraction:
    """Smallest theta at which SOP(j, theta / p_ij) keeps k from beating i."""
    pi, pk = inst.probs[i][j], inst.probs[k][j]
    gap = inst.costs[i] - inst.costs[k]
    if pk == 0:
        return gap
    if pi <= pk:
        raise InternalInconsistency(
            "non-positive denominator in SOP threshold",
            {"action": i, "against": k, "outcome": j},
        )
    return pi * gap / (pi - pk)


def cumulative_pivot(inst: Instance, i: int, k: int) -> int:
    """
    Threshold outcome maximizing tail_i / tail_k over every j with a positive
    tail under i, that is j <= h(i); ties go to the smallest index.
    """
    best_j, best = None, None
    for j in range(inst.support(i)[-1] + 1):
        ratio = ExtendedRatio.of(inst.tail(i, j), inst.tail(k, j))
        if best is None or best < ratio:
            best_j, best = j, ratio
    return best_j


def step_threshold(inst: Instance, i: int, k: int, j: int) -> Fraction:
    ti, tk = inst.tail(i, j), inst.tail(k, j)
    if ti <= tk:
        raise InternalInconsistency(
            "non-positive denominator in step threshold",
            {"action": i, "against": k, "outcome": j},
        )
    return ti * (inst.costs[i] - inst.costs[k]) / (ti - tk)


def _certified(inst: Instance, i: int, tau: AmbiguousContract, level: WaterLevel) -> SolveResult:
    certificate = validate(inst, tau, i)
    if not certificate.passed:
        raise InternalInconsistency(
            f"solver output for action {inst.label(i)} fails validation",
            {"failures": [f"{it.name}: {it.detail}" for it in certificate.failures()]},
        )
    return SolveResult.from_contracts(inst, i, tau, certificate, level)


def solve_general_for_action(inst: Instance, i: int) -> SolveResult:
    """Cheapest SOP ambiguous contract that incentivizes i."""
    check_action(inst, i)
    if not has_distinct_rows(inst):
        raise PreconditionError("instance has duplicate action rows; run dedupe_actions first")

    theta, binding = inst.costs[i], None
    chosen: set[int] = set()
    for k in range(inst.n):
        if k == i:
            continue
        j = sop_pivot(inst, i, k)
        theta_k = sop_threshold(inst, i, k, j)
        if theta_k > theta:
            theta, binding = theta_k, k
        chosen.add(j)
    if not chosen:
        chosen.add(inst.support(i)[0])

    outcomes = tuple(sorted(chosen))
    tau = AmbiguousContract.of(Contract.sop(inst.m, j, theta / inst.probs[i][j]) for j in outcomes)
    logger.debug("action %s: theta=%s outcomes=%s", inst.label(i), fraction_text(theta), outcomes)
    return _certified(inst, i, tau, WaterLevel(theta, binding, outcomes))


def cumulatively_dominated(inst: Instance, i: int, k: int) -> bool:
    """tail_i(j) <= tail_k(j) at every threshold j."""
    return all(inst.tail(i, j) <= inst.tail(k, j) for j in range(inst.m))


def solve_monotone_for_action(inst: Instance, i: int) -> SolveResult:
    """Cheapest step-contract ambiguous contract for i, or NOT_MONOTONE_IMPLEMENTABLE."""
    check_action(inst, i)
    cheaper = [k for k in range(inst.n) if inst.costs[k] < inst.costs[i]]
    for k in cheaper:
        if cumulatively_dominated(inst, i, k):
            logger.debug("action %s cumulatively dominated by %s", inst.label(i), inst.label(k))
            return SolveResult.unavailable(SolveStatus.NOT_MONOTONE_IMPLEMENTABLE, i)

    # the base step at l(i) pays theta and covers every action that is not strictly cheaper
    theta, binding = inst.costs[i], None
    chosen: set[int] = {inst.support(i)[0]}
    for k in cheaper:
        j = cumulative_pivot(inst, i, k)
        theta_k = step_threshold(inst, i, k, j)
        if theta_k > theta:
            theta, binding = theta_k, k
        chosen.add(j)

    outcomes = tuple(sorted(chosen))
    tau = AmbiguousContract.of(Contract.step(inst.m, j, theta / inst.tail(i, j)) for j in outcomes)
    logger.debug("action %s (monotone): theta=%s thresholds=%s", inst.label(i), fraction_text(theta), outcomes)
    return _certified(inst, i, tau, WaterLevel(theta, binding, outcomes))


def best_of(results: list[SolveResult], failure: SolveStatus) -> SolveResult:
    """Max principal utility; ties go to the smaller action index."""
    feasible = [r for r in results if r.ok]
    if not feasible:
        return SolveResult.unavailable(failure)
    return max(feasible, key=lambda r: (r.principal_utility, -r.action))


def per_action(solver, inst: Instance, threads: int) -> list[SolveResult]:
    if threads > 1 and inst.n > 1:
        return Parallel(n_jobs=threads, prefer="threads")(delayed(solver)(inst, i) for i in range(inst.n))
    return [solver(inst, i) for i in range(inst.n)]


def solve_general(inst: Instance, threads: int = 1) -> SolveResult:
    return best_of(per_action(solve_general_for_action, inst, threads), SolveStatus.INFEASIBLE)


def solve_monotone(inst: Instance, threads: int = 1) -> SolveResult:
    return best_of(
        per_action(solve_monotone_for_action, inst, threads),
        SolveStatus.NOT_MONOTONE_IMPLEMENTABLE,
    )
