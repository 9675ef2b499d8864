"""
Instance generators built from diagonal action sets.

A diagonal set with parameters (W, c) over rewards r (r_1 = 0) holds the
point mass on outcome 1 plus, for every j >= 2, an action putting
(W + c) / r_j on outcome j and the rest on outcome 1. All of them cost c
and have expected reward W + c.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.engine.errors import PreconditionError
from src.engine.model import Instance, fraction_text, to_fraction
from src.engine.model.rational import RationalLike


@dataclass(frozen=True)
class DiagonalParams:
    rewards: tuple[Fraction, ...]
    welfare: Fraction
    cost: Fraction

    @classmethod
    def of(cls, rewards: Sequence[RationalLike], welfare: RationalLike, cost: RationalLike) -> DiagonalParams:
        return cls(tuple(to_fraction(r) for r in rewards), to_fraction(welfare), to_fraction(cost))

    @property
    def m(self) -> int:
        return len(self.rewards)


@dataclass(frozen=True)
class DiagonalRows:
    probs: tuple[tuple[Fraction, ...], ...]
    costs: tuple[Fraction, ...]
    # rows with p_jj > 1; only produced when pseudo rows are allowed
    pseudo: tuple[int, ...] = ()


def gen_diagonal(params: DiagonalParams, allow_pseudo: bool = False) -> DiagonalRows:
    r = params.rewards
    if not r or r[0] != 0:
        raise PreconditionError("diagonal sets need r_1 = 0")
    if any(x <= 0 for x in r[1:]):
        raise PreconditionError("diagonal sets need positive rewards beyond outcome 1")
    level = params.welfare + params.cost
    if level < 0:
        raise PreconditionError("W + c must be nonnegative")

    m = params.m
    rows = [tuple(Fraction(int(k == 0)) for k in range(m))]
    pseudo = []
    for j in range(1, m):
        mass = level / r[j]
        if mass > 1:
            if not allow_pseudo:
                raise PreconditionError(
                    f"outcome {j + 1}: (W + c) / r_j = {fraction_text(mass)} exceeds 1"
                )
            pseudo.append(j)
        row = [Fraction(0)] * m
        row[0], row[j] = 1 - mass, mass
        rows.append(tuple(row))
    return DiagonalRows(tuple(rows), tuple(params.cost for _ in range(m)), tuple(pseudo))


def diagonal_instance(params: DiagonalParams) -> Instance:
    rows = gen_diagonal(params)
    labels = [f"d{j + 1}" for j in range(params.m)]
    return Instance.build(rows.costs, params.rewards, rows.probs, action_labels=labels)


def gen_two_effort_gap(eps: RationalLike, delta: RationalLike) -> Instance:
    """
    Four actions, three outcomes, r = (0, delta, 1 + delta): a free diagonal
    set with welfare eps and one costly action with welfare 2 eps - eps^2,
    which a single contract can only use to earn eps.
    """
    e, d = to_fraction(eps), to_fraction(delta)
    if not (1 > d > e > 0):
        raise PreconditionError("need 1 > delta > eps > 0")
    rewards = (Fraction(0), d, 1 + d)
    low = gen_diagonal(DiagonalParams(rewards, e, Fraction(0)))
    probs = list(low.probs) + [(Fraction(0), d, 1 - d)]
    costs = list(low.costs) + [(1 - e) ** 2]
    labels = ["d1", "d2", "d3", "high"]
    return Instance.build(costs, rewards, probs, action_labels=labels)
