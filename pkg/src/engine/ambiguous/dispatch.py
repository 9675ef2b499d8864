"""
Entry points that pick the right solver and normalize the instance first.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from src.engine.ambiguous.mlrp import (
    solve_mlrp,
    solve_mlrp_for_action,
    solve_mlrp_monotone,
    solve_mlrp_monotone_for_action,
)
from src.engine.ambiguous.validator import validate
from src.engine.ambiguous.waterfill import (
    solve_general,
    solve_general_for_action,
    solve_monotone,
    solve_monotone_for_action,
)
from src.engine.errors import PreconditionError
from src.engine.model import (
    AmbiguousContract,
    Contract,
    Instance,
    SolveResult,
    check_action,
    dedupe_actions,
)
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


def optimal_ambiguous(
    inst: Instance,
    monotone: bool = False,
    mlrp_fast: bool = False,
    threads: int = 1,
) -> SolveResult:
    """
    Best ambiguous contract over all actions. Duplicate action rows are
    dropped before solving; the returned result refers to `inst`.
    """
    report = dedupe_actions(inst)
    if report.removed:
        logger.info("dropped %d duplicate action(s) before solving", len(report.removed))
    reduced = report.instance

    if mlrp_fast:
        result = solve_mlrp_monotone(reduced, threads) if monotone else solve_mlrp(reduced, threads)
    else:
        result = solve_monotone(reduced, threads) if monotone else solve_general(reduced, threads)

    if not result.ok:
        return result
    return _lift(inst, report, result)


def minimal_sop_support(inst: Instance, i: int, theta: Fraction) -> tuple[int, ...] | None:
    """
    Smallest set of outcomes whose SOP contracts, each paying i exactly
    theta, incentivize i. Exhaustive over subsets of supp(p_i); meant for
    small m. None when no subset works at this level.
    """
    check_action(inst, i)
    if theta < 0:
        raise PreconditionError("theta must be nonnegative")
    support = inst.support(i)
    p = inst.probs[i]
    for size in range(1, len(support) + 1):
        for subset in combinations(support, size):
            tau = AmbiguousContract.of(Contract.sop(inst.m, j, theta / p[j]) for j in subset)
            if validate(inst, tau, i).passed:
                return subset
    return None


def action_solver(monotone: bool = False, mlrp_fast: bool = False):
    if mlrp_fast:
        return solve_mlrp_monotone_for_action if monotone else solve_mlrp_for_action
    return solve_monotone_for_action if monotone else solve_general_for_action


def _lift(inst: Instance, report, result: SolveResult) -> SolveResult:
    """Re-express a result on the deduplicated instance in terms of `inst`."""
    if not report.removed:
        return result
    action = report.kept[result.action] if result.action is not None else None
    if not result.ok:
        return SolveResult.unavailable(result.status, action)
    return SolveResult.from_contracts(
        inst, action, result.contracts, validate(inst, result.contracts, action), result.water_level
    )


def solve_for_action(
    inst: Instance, i: int, monotone: bool = False, mlrp_fast: bool = False
) -> SolveResult:
    """Cheapest ambiguous contract for one action, tolerating duplicate rows elsewhere."""
    check_action(inst, i)
    report = dedupe_actions(inst)
    if i not in report.kept:
        raise PreconditionError(
            f"action {inst.label(i)} repeats the distribution of a cheaper action and cannot be singled out"
        )
    result = action_solver(monotone, mlrp_fast)(report.instance, report.kept.index(i))
    return _lift(inst, report, result)


def per_action_results(
    inst: Instance, monotone: bool = False, mlrp_fast: bool = False
) -> list[SolveResult | None]:
    """One ambiguous result per action of `inst`; None for dropped duplicates."""
    report = dedupe_actions(inst)
    solver = action_solver(monotone, mlrp_fast)
    results: list[SolveResult | None] = [None] * inst.n
    for reduced, i in enumerate(report.kept):
        results[i] = _lift(inst, report, solver(report.instance, reduced))
    return results
