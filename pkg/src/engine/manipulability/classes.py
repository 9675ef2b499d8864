"""
Manipulability verdicts for the built-in contract classes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.engine.ambiguous.dispatch import optimal_ambiguous
from src.engine.gap.fixtures import example1, monotone_omega
from src.engine.gap.metrics import ambiguity_gap
from src.engine.lp.contracts import optimal_single
from src.engine.manipulability.curves import ContractCurve, CurveFamily, NpcVerdict, npc_check
from src.engine.manipulability.witness import Witness, witness_from_crossing
from src.engine.model import fraction_text, to_fraction
from src.engine.model.rational import RationalLike
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClassVerdict:
    name: str
    verdict: NpcVerdict
    manipulable: bool
    witness: Witness | None = None
    ratio: Fraction | None = None
    note: str = ""


def _grid(grid: Sequence[RationalLike], extra: Sequence[RationalLike] = ()) -> list[Fraction]:
    return sorted({to_fraction(x) for x in list(grid) + list(extra)})


def linear_class() -> ClassVerdict:
    result = npc_check(CurveFamily.linear())
    return ClassVerdict("linear", result.verdict, False, note="ordered by the slope")


def power_class(degree: int = 2) -> ClassVerdict:
    result = npc_check(CurveFamily.power(degree))
    return ClassVerdict(f"power-{degree}", result.verdict, False, note="ordered by the coefficient")


def polynomial_class(grid: Sequence[RationalLike]) -> ClassVerdict:
    square = ContractCurve.polynomial([0, 0, 1])
    quartic = ContractCurve.polynomial([0, 0, 0, 0, 1])
    points = _grid(grid, (Fraction(1, 2), Fraction(2)))
    result = npc_check([square, quartic], points)
    witness = witness_from_crossing(square, quartic, points)
    return ClassVerdict(
        "polynomial",
        result.verdict,
        witness is not None,
        witness,
        note="x^2 and x^4 cross between 1/2 and 2",
    )


def monotone_class() -> ClassVerdict:
    """
    Two monotone contracts that cross give the witness; the improvement
    ratio comes from the monotone_omega instance.
    """
    rewards = (Fraction(0), Fraction(4), Fraction(8))
    flat = ContractCurve.table(list(zip(rewards, (0, 2, 2))))
    steep = ContractCurve.table(list(zip(rewards, (0, 0, 4))))
    result = npc_check([flat, steep], rewards)
    witness = witness_from_crossing(flat, steep, rewards, rewards)

    inst = monotone_omega().instance
    single = optimal_single(inst, monotone=True)
    ambiguous = optimal_ambiguous(inst, monotone=True)
    ratio = None
    if single.ok and ambiguous.ok and single.principal_utility > 0:
        ratio = ambiguous.principal_utility / single.principal_utility
    return ClassVerdict("monotone", result.verdict, witness is not None, witness, ratio,
                        note="(0,2,2) and (0,0,4) cross on r = (0,4,8)")


def all_contracts_class() -> ClassVerdict:
    report = ambiguity_gap(example1().instance)
    return ClassVerdict(
        "all-contracts",
        NpcVerdict.VIOLATED,
        True,
        ratio=report.rho,
        note="three-action instance where a pair of contracts gains 50%",
    )


def analyze_builtin_classes(grid: Sequence[RationalLike]) -> list[ClassVerdict]:
    rows = [
        linear_class(),
        power_class(2),
        polynomial_class(grid),
        monotone_class(),
        all_contracts_class(),
    ]
    for row in rows:
        logger.debug(
            "%s: %s%s", row.name, row.verdict.value,
            f" ratio={fraction_text(row.ratio)}" if row.ratio is not None else "",
        )
    return rows
