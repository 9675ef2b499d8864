"""
Structural predicates on contracts and instances, plus input sanitization.
"""
from __future__ import annotations

from dataclasses import dataclass

from src.engine.model.model import Contract, Instance, subinstance
from src.engine.model.rational import ExtendedRatio


def is_sop(t: Contract) -> bool:
    """Single outcome payment: exactly one positive entry."""
    return sum(1 for x in t.payments if x > 0) == 1


def is_step(t: Contract) -> bool:
    """Zero below some threshold k, one positive constant from k on."""
    positive = [j for j, x in enumerate(t.payments) if x > 0]
    if not positive:
        return False
    k = positive[0]
    level = t.payments[k]
    return all(x == 0 for x in t.payments[:k]) and all(x == level for x in t.payments[k:])


def is_monotone(t: Contract) -> bool:
    return all(a <= b for a, b in zip(t.payments, t.payments[1:]))


def has_distinct_rows(inst: Instance) -> bool:
    return len(set(inst.probs)) == inst.n


@dataclass(frozen=True)
class DedupeReport:
    instance: Instance
    kept: tuple[int, ...]
    removed: tuple[int, ...]


def dedupe_actions(inst: Instance) -> DedupeReport:
    """
    Drop actions whose distribution duplicates a cheaper one (or an equally
    cheap one with a lower index). Indices in the report refer to `inst`.
    """
    first: dict[tuple, int] = {}
    removed = []
    for i, row in enumerate(inst.probs):
        if row in first:
            removed.append(i)
        else:
            first[row] = i
    kept = tuple(sorted(first.values()))
    if not removed:
        return DedupeReport(inst, kept, ())

    return DedupeReport(subinstance(inst, kept), kept, tuple(removed))


@dataclass(frozen=True)
class MlrpCheck:
    holds: bool
    # (i, i', j, j') with c_i > c_i', j < j' and ratio(j') < ratio(j)
    witness: tuple[int, int, int, int] | None = None


def _ratio(inst: Instance, i: int, k: int, j: int) -> ExtendedRatio | None:
    a, b = inst.probs[i][j], inst.probs[k][j]
    if a == 0 and b == 0:
        return None
    return ExtendedRatio.of(a, b)


def is_mlrp(inst: Instance) -> MlrpCheck:
    """Monotone likelihood ratio property over all strictly cost-ordered pairs."""
    for i in range(inst.n):
        for k in range(inst.n):
            if not inst.costs[i] > inst.costs[k]:
                continue
            ratios = [_ratio(inst, i, k, j) for j in range(inst.m)]
            for j in range(inst.m):
                if ratios[j] is None:
                    continue
                for jj in range(j + 1, inst.m):
                    if ratios[jj] is not None and ratios[jj] < ratios[j]:
                        return MlrpCheck(False, (i, k, j, jj))
    return MlrpCheck(True)
