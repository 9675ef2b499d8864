"""
Helper functions shared by the subcommands.
"""
from fractions import Fraction
from typing import Any

from src.engine.ambiguous import per_action_results
from src.engine.errors import InstanceError
from src.engine.lp import min_payments
from src.engine.model import Instance, action_table, fraction_text, to_fraction
from src.schemas import action_number, rational_text
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


def resolve_action(inst: Instance, number: int) -> int:
    """
    1-based action number in the caller's order -> internal index.

    Raises:
        InstanceError: number out of range
    """
    if not 1 <= number <= inst.n:
        raise InstanceError(f"action {number} out of range 1..{inst.n}")
    return inst.action_origin.index(number - 1)


def parse_params(items: list[str] | None) -> dict[str, str]:
    """key=value pairs from the command line."""
    params: dict[str, str] = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InstanceError(f"expected key=value, got {item!r}")
        params[key.strip()] = value.strip()
    return params


def param_int(params: dict[str, str], key: str, default: int) -> int:
    if key not in params:
        return default
    try:
        return int(params[key])
    except ValueError as e:
        raise InstanceError(f"{key} must be an integer, got {params[key]!r}") from e


def param_rational(params: dict[str, str], key: str, default: Fraction) -> Fraction:
    return to_fraction(params[key]) if key in params else default


def param_list(params: dict[str, str], key: str) -> list[Fraction] | None:
    if key not in params:
        return None
    return [to_fraction(v) for v in params[key].split(",") if v.strip()]


def textify(value: Any) -> Any:
    """Fractions anywhere inside a structure -> canonical text."""
    if isinstance(value, Fraction):
        return fraction_text(value)
    if isinstance(value, dict):
        return {str(k): textify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [textify(v) for v in value]
    return value


def action_rows(inst: Instance, monotone: bool = False, mlrp_fast: bool = False, threads: int = 1) -> list[dict]:
    """
    Per-action table in the caller's action order: cost, expected reward,
    welfare, cheapest single and ambiguous payments with the resulting
    principal utilities. Blank cells mean the action cannot be incentivized.
    """
    singles = min_payments(inst, monotone, threads)
    ambiguous = per_action_results(inst, monotone, mlrp_fast)
    rows = []
    for row in action_table(inst):
        single = singles[row.index]
        amb = ambiguous[row.index]
        rows.append({
            "action": action_number(inst, row.index),
            "label": row.label,
            "cost": fraction_text(row.cost),
            "reward": fraction_text(row.reward),
            "welfare": fraction_text(row.welfare),
            "single_payment": rational_text(single.payment) if single.feasible else None,
            "single_utility": rational_text(row.reward - single.payment) if single.feasible else None,
            "ambiguous_payment": rational_text(amb.expected_payment) if amb is not None and amb.ok else None,
            "ambiguous_utility": rational_text(amb.principal_utility) if amb is not None and amb.ok else None,
        })
    rows.sort(key=lambda r: r["action"])
    return rows
