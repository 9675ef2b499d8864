"""
Manipulability - 合同曲线、无真交叉检查与可操纵性见证
"""

from .classes import (
    ClassVerdict,
    all_contracts_class,
    analyze_builtin_classes,
    linear_class,
    monotone_class,
    polynomial_class,
    power_class,
)
from .curves import (
    ContractCurve,
    CurveFamily,
    CurveKind,
    NpcResult,
    NpcVerdict,
    crossing_points,
    evaluate_polynomial,
    npc_check,
)
from .witness import (
    Witness,
    build_witness,
    q_from_crossing,
    q_from_gaps,
    sop_as_polynomial,
    witness_from_crossing,
)

__all__ = [
    "ClassVerdict",
    "ContractCurve",
    "CurveFamily",
    "CurveKind",
    "NpcResult",
    "NpcVerdict",
    "Witness",
    "all_contracts_class",
    "analyze_builtin_classes",
    "build_witness",
    "crossing_points",
    "evaluate_polynomial",
    "linear_class",
    "monotone_class",
    "npc_check",
    "polynomial_class",
    "power_class",
    "q_from_crossing",
    "q_from_gaps",
    "sop_as_polynomial",
    "witness_from_crossing",
]
