"""
Model - 核心领域类型与期望值计算

- rational: 精确有理数转换、规范文本、可为无穷的似然比
- model: Instance / Contract / AmbiguousContract / SolveResult 与效用函数
- structure: 合同结构谓词、动作去重、MLRP 检查
"""

from .model import (
    ActionRow,
    AmbiguousContract,
    Certificate,
    CertificateItem,
    CheckStatus,
    Contract,
    Instance,
    SolveResult,
    SolveStatus,
    action_table,
    agent_utility,
    best_response,
    check_action,
    dominates,
    expected_payment,
    expected_reward,
    has_proper_crossing,
    is_consistent,
    maxmin_best_response,
    maxmin_utility,
    principal_utility,
    prune_dominated,
    subinstance,
    verify_replication,
    welfare,
)
from .rational import ExtendedRatio, decimal_text, fraction_text, to_fraction
from .structure import (
    DedupeReport,
    MlrpCheck,
    dedupe_actions,
    has_distinct_rows,
    is_monotone,
    is_mlrp,
    is_sop,
    is_step,
)

__all__ = [
    "ActionRow",
    "AmbiguousContract",
    "Certificate",
    "CertificateItem",
    "CheckStatus",
    "Contract",
    "DedupeReport",
    "ExtendedRatio",
    "Instance",
    "MlrpCheck",
    "SolveResult",
    "SolveStatus",
    "action_table",
    "agent_utility",
    "best_response",
    "check_action",
    "decimal_text",
    "dedupe_actions",
    "dominates",
    "expected_payment",
    "expected_reward",
    "fraction_text",
    "has_distinct_rows",
    "has_proper_crossing",
    "is_consistent",
    "is_monotone",
    "is_mlrp",
    "is_sop",
    "is_step",
    "maxmin_best_response",
    "maxmin_utility",
    "principal_utility",
    "prune_dominated",
    "subinstance",
    "to_fraction",
    "verify_replication",
    "welfare",
]
