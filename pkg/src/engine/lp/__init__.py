"""
LP - 精确有理数线性规划与单合同问题
"""

from .contracts import (
    LinearPayment,
    MinPayment,
    at_cost_contract,
    implementable,
    min_payment,
    min_payment_linear,
    min_payment_problem,
    min_payments,
    optimal_single,
    replication_certificate,
)
from .simplex import LpConstraint, LpProblem, LpSolution, LpStatus, Relation, simplex_solve

__all__ = [
    "LinearPayment",
    "LpConstraint",
    "LpProblem",
    "LpSolution",
    "LpStatus",
    "MinPayment",
    "Relation",
    "at_cost_contract",
    "implementable",
    "min_payment",
    "min_payment_linear",
    "min_payment_problem",
    "min_payments",
    "optimal_single",
    "replication_certificate",
    "simplex_solve",
]
