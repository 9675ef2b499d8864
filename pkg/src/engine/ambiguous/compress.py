"""
Structural normal forms: any consistent ambiguous contract that incentivizes
an action can be replaced by one made of SOP contracts (or of step contracts
when every member is monotone) with the same target action and payment.
"""
from __future__ import annotations

from fractions import Fraction

from src.engine.ambiguous.validator import validate
from src.engine.ambiguous.waterfill import cumulative_pivot, sop_pivot
from src.engine.errors import InternalInconsistency, PreconditionError
from src.engine.model import (
    AmbiguousContract,
    Contract,
    Instance,
    expected_payment,
    is_monotone,
)


def _common_payment(inst: Instance, tau: AmbiguousContract, i: int) -> Fraction:
    certificate = validate(inst, tau, i)
    if not certificate.passed:
        raise PreconditionError(
            f"contract does not incentivize {inst.label(i)} consistently: "
            + "; ".join(f"{it.name} {it.detail}" for it in certificate.failures())
        )
    return expected_payment(inst, i, tau.contracts[0])


def _check(inst: Instance, compressed: AmbiguousContract, i: int) -> AmbiguousContract:
    certificate = validate(inst, compressed, i)
    if not certificate.passed:
        raise InternalInconsistency(
            "compressed contract fails validation",
            {"failures": [f"{it.name}: {it.detail}" for it in certificate.failures()]},
        )
    return compressed


def compress_to_sop(inst: Instance, tau: AmbiguousContract, i: int) -> AmbiguousContract:
    """One SOP contract per competing action, each paying i exactly T_i(tau)."""
    level = _common_payment(inst, tau, i)
    p = inst.probs[i]
    chosen: set[int] = set()
    for k in range(inst.n):
        # an identical row is already held off by any contract in tau
        if k == i or inst.probs[k] == p:
            continue
        chosen.add(sop_pivot(inst, i, k))
    if not chosen:
        chosen.add(inst.support(i)[0])
    compressed = AmbiguousContract.of(Contract.sop(inst.m, j, level / p[j]) for j in sorted(chosen))
    return _check(inst, compressed, i)


def compress_to_step(inst: Instance, tau: AmbiguousContract, i: int) -> AmbiguousContract:
    """Step-contract counterpart of compress_to_sop for monotone inputs."""
    if not all(is_monotone(t) for t in tau):
        raise PreconditionError("compress_to_step needs monotone contracts")
    level = _common_payment(inst, tau, i)
    cheaper = [k for k in range(inst.n) if inst.costs[k] < inst.costs[i]]
    chosen = {inst.support(i)[0]} | {cumulative_pivot(inst, i, k) for k in cheaper}
    compressed = AmbiguousContract.of(
        Contract.step(inst.m, j, level / inst.tail(i, j)) for j in sorted(chosen)
    )
    return _check(inst, compressed, i)
