"""
合同求解引擎 - 精确有理数运算的委托代理合同设计

核心组件：
- model: 实例、合同、模糊合同与效用函数
- lp: 精确单纯形与最小付款线性规划
- ambiguous: 最优模糊合同、压缩与验证
- manipulability: 合同类的可操纵性检查
- gap: 模糊差距度量与实例生成
"""

from .errors import (
    AmbiconError,
    ContractError,
    DocumentError,
    InstanceError,
    InternalInconsistency,
    LpError,
    PreconditionError,
)

__all__ = [
    "AmbiconError",
    "ContractError",
    "DocumentError",
    "InstanceError",
    "InternalInconsistency",
    "LpError",
    "PreconditionError",
]
