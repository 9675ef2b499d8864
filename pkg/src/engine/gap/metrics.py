"""
Ambiguity gap: how much an ambiguous contract (rho) or full surplus
extraction (rho_hat) improves on the best single contract.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from src.engine.ambiguous.dispatch import optimal_ambiguous
from src.engine.lp.contracts import optimal_single
from src.engine.model import Instance, SolveResult, fraction_text, welfare
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


class GapStatus(str, Enum):
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class GapReport:
    status: GapStatus
    rho: Fraction | None
    rho_hat: Fraction | None
    best_single: SolveResult
    best_ambiguous: SolveResult
    first_best_action: int
    first_best: Fraction


def first_best(inst: Instance) -> tuple[int, Fraction]:
    """Action with maximum welfare (lowest index on ties) and that welfare."""
    action = max(range(inst.n), key=lambda i: (welfare(inst, i), -i))
    return action, welfare(inst, action)


def ambiguity_gap(inst: Instance, monotone: bool = False, threads: int = 1) -> GapReport:
    single = optimal_single(inst, monotone=monotone, threads=threads)
    ambiguous = optimal_ambiguous(inst, monotone=monotone, threads=threads)
    action, w_max = first_best(inst)

    base = single.principal_utility if single.ok else None
    if base is None or base <= 0:
        logger.info("best single contract yields no positive utility; gap is infinite")
        return GapReport(GapStatus.INFINITE, None, None, single, ambiguous, action, w_max)

    best = ambiguous.principal_utility if ambiguous.ok else Fraction(0)
    rho, rho_hat = best / base, w_max / base
    logger.debug("rho=%s rho_hat=%s", fraction_text(rho), fraction_text(rho_hat))
    return GapReport(GapStatus.FINITE, rho, rho_hat, single, ambiguous, action, w_max)
