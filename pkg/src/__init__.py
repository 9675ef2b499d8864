"""
ambicon - 单一合同与模糊合同的精确求解、差距度量与可操纵性检查
"""

__version__ = "0.1.0"
__description__ = "Exact solvers for single and ambiguous principal-agent contracts"
