"""
Ambiguous - 最优模糊合同求解器、结构压缩与验证
"""

from .compress import compress_to_sop, compress_to_step
from .dispatch import action_solver, minimal_sop_support, optimal_ambiguous, per_action_results, solve_for_action
from .mlrp import (
    SupportScan,
    solve_mlrp,
    solve_mlrp_for_action,
    solve_mlrp_monotone,
    solve_mlrp_monotone_for_action,
    support_scan,
)
from .validator import validate
from .waterfill import (
    WaterLevel,
    cumulatively_dominated,
    solve_general,
    solve_general_for_action,
    solve_monotone,
    solve_monotone_for_action,
)

__all__ = [
    "SupportScan",
    "WaterLevel",
    "action_solver",
    "compress_to_sop",
    "compress_to_step",
    "cumulatively_dominated",
    "minimal_sop_support",
    "optimal_ambiguous",
    "per_action_results",
    "solve_for_action",
    "solve_general",
    "solve_general_for_action",
    "solve_mlrp",
    "solve_mlrp_for_action",
    "solve_mlrp_monotone",
    "solve_mlrp_monotone_for_action",
    "solve_monotone",
    "solve_monotone_for_action",
    "support_scan",
    "validate",
]
