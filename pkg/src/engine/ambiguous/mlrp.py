"""
Fast paths for instances with the monotone likelihood ratio property.

Under MLRP the lowest and highest support outcomes move up with cost, and a
two-contract family (one paying at l(i), one at h(i)) is optimal both for
SOP and for step contracts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from src.engine.ambiguous.validator import validate
from src.engine.ambiguous.waterfill import WaterLevel, per_action, best_of
from src.engine.errors import PreconditionError
from src.engine.model import (
    AmbiguousContract,
    Contract,
    Instance,
    SolveResult,
    SolveStatus,
    check_action,
    fraction_text,
    has_distinct_rows,
    is_mlrp,
)
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SupportScan:
    low: tuple[int, ...]
    high: tuple[int, ...]


def _require_mlrp(inst: Instance) -> None:
    check = is_mlrp(inst)
    if not check.holds:
        i, k, j, jj = check.witness
        raise PreconditionError(
            f"instance violates MLRP: actions {inst.label(i)}/{inst.label(k)} "
            f"at outcomes {inst.outcome_labels[j]}/{inst.outcome_labels[jj]}"
        )


def support_scan(inst: Instance) -> SupportScan:
    """
    l(i) and h(i) for every action in two sweeps. Pointers only move
    forward between actions of strictly increasing cost; an action that
    shares its cost with its predecessor is scanned directly.
    """
    _require_mlrp(inst)
    n, m = inst.n, inst.m

    low = [0] * n
    j = 0
    for i in range(n):
        if i > 0 and inst.costs[i] == inst.costs[i - 1]:
            j = 0
        while inst.probs[i][j] == 0:
            j += 1
        low[i] = j

    high = [0] * n
    j = m - 1
    for i in range(n - 1, -1, -1):
        if i < n - 1 and inst.costs[i] == inst.costs[i + 1]:
            j = m - 1
        while inst.probs[i][j] == 0:
            j -= 1
        high[i] = j

    return SupportScan(tuple(low), tuple(high))


def _require_distinct(inst: Instance) -> None:
    if not has_distinct_rows(inst):
        raise PreconditionError("instance has duplicate action rows; run dedupe_actions first")


def _mlrp_level(inst: Instance, i: int, h: int) -> tuple[Fraction, int | None]:
    theta, binding = inst.costs[i], None
    pi = inst.probs[i][h]
    for k in range(i):
        gap = inst.costs[i] - inst.costs[k]
        if gap == 0:
            continue
        pk = inst.probs[k][h]
        if pi <= pk:
            raise PreconditionError(
                f"p[{inst.label(i)}][h] <= p[{inst.label(k)}][h]; the MLRP fast path does not apply"
            )
        theta_k = pi * gap / (pi - pk)
        if theta_k > theta:
            theta, binding = theta_k, k
    return theta, binding


def _finish(inst: Instance, i: int, tau: AmbiguousContract, level: WaterLevel) -> SolveResult:
    certificate = validate(inst, tau, i)
    if not certificate.passed:
        # equal-cost actions are outside the MLRP ordering argument
        raise PreconditionError(
            f"MLRP fast path does not certify action {inst.label(i)}: "
            + "; ".join(f"{it.name} {it.detail}" for it in certificate.failures())
        )
    return SolveResult.from_contracts(inst, i, tau, certificate, level)


def solve_mlrp_for_action(inst: Instance, i: int, scan: SupportScan | None = None) -> SolveResult:
    """Two SOP contracts paying at l(i) and h(i)."""
    check_action(inst, i)
    _require_distinct(inst)
    scan = scan or support_scan(inst)
    low, high = scan.low[i], scan.high[i]
    theta, binding = _mlrp_level(inst, i, high)
    p = inst.probs[i]
    tau = AmbiguousContract.of([
        Contract.sop(inst.m, low, theta / p[low]),
        Contract.sop(inst.m, high, theta / p[high]),
    ])
    logger.debug("action %s (MLRP): theta=%s l=%d h=%d", inst.label(i), fraction_text(theta), low, high)
    return _finish(inst, i, tau, WaterLevel(theta, binding, tuple(sorted({low, high}))))


def solve_mlrp_monotone_for_action(inst: Instance, i: int, scan: SupportScan | None = None) -> SolveResult:
    """Two step contracts starting at l(i) and h(i)."""
    check_action(inst, i)
    _require_distinct(inst)
    scan = scan or support_scan(inst)
    low, high = scan.low[i], scan.high[i]
    theta, binding = _mlrp_level(inst, i, high)
    tau = AmbiguousContract.of([
        Contract.step(inst.m, low, theta),
        Contract.step(inst.m, high, theta / inst.probs[i][high]),
    ])
    logger.debug("action %s (MLRP, monotone): theta=%s", inst.label(i), fraction_text(theta))
    return _finish(inst, i, tau, WaterLevel(theta, binding, tuple(sorted({low, high}))))


def solve_mlrp(inst: Instance, threads: int = 1) -> SolveResult:
    scan = support_scan(inst)
    return best_of(
        per_action(lambda inst_, i: solve_mlrp_for_action(inst_, i, scan), inst, threads),
        SolveStatus.INFEASIBLE,
    )


def solve_mlrp_monotone(inst: Instance, threads: int = 1) -> SolveResult:
    scan = support_scan(inst)
    return best_of(
        per_action(lambda inst_, i: solve_mlrp_monotone_for_action(inst_, i, scan), inst, threads),
        SolveStatus.NOT_MONOTONE_IMPLEMENTABLE,
    )
