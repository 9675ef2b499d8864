"""
Certificate builder for an (ambiguous) contract and a target action.
"""
from __future__ import annotations

from src.engine.errors import ContractError
from src.engine.model import (
    AmbiguousContract,
    Certificate,
    CertificateItem,
    CheckStatus,
    Instance,
    check_action,
    expected_payment,
    fraction_text,
    maxmin_best_response,
    maxmin_utility,
)


def validate(inst: Instance, tau: AmbiguousContract, i: int) -> Certificate:
    """
    Check consistency, max-min IC against every other action and IR for i.

    IC is the weak inequality on worst-case utilities. When another action
    ties and the agent's tie-break would pick it, the `tie_break` item is a
    warning, not a failure.
    """
    check_action(inst, i)
    if tau.m != inst.m:
        raise ContractError(f"contracts have {tau.m} payments, instance has {inst.m} outcomes")

    items: list[CertificateItem] = []

    payments = [expected_payment(inst, i, t) for t in tau]
    consistent = len(set(payments)) == 1
    items.append(CertificateItem(
        "consistency",
        CheckStatus.PASS if consistent else CheckStatus.FAIL,
        "payments " + ", ".join(fraction_text(p) for p in payments),
    ))

    own = maxmin_utility(inst, i, tau)
    for k in range(inst.n):
        if k == i:
            continue
        other = maxmin_utility(inst, k, tau)
        items.append(CertificateItem(
            f"ic:{inst.action_labels[k]}",
            CheckStatus.PASS if own >= other else CheckStatus.FAIL,
            f"{fraction_text(own)} vs {fraction_text(other)}",
        ))

    items.append(CertificateItem(
        "ir",
        CheckStatus.PASS if own >= 0 else CheckStatus.FAIL,
        f"worst-case agent utility {fraction_text(own)}",
    ))

    chosen = maxmin_best_response(inst, tau)
    items.append(CertificateItem(
        "tie_break",
        CheckStatus.PASS if chosen == i else CheckStatus.WARN,
        f"agent picks {inst.action_labels[chosen]}",
    ))
    return Certificate(tuple(items))
