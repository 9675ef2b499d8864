"""
Named reference instances with the values a correct solver must reproduce.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from src.engine.errors import PreconditionError
from src.engine.model import Instance, to_fraction
from src.engine.model.rational import RationalLike


@dataclass(frozen=True)
class Fixture:
    name: str
    instance: Instance
    reference: dict[str, Any] = field(default_factory=dict)


def example1() -> Fixture:
    """Three actions where a pair of contracts beats every single contract by half."""
    inst = Instance.build(
        costs=[0, 0, 1],
        rewards=[0, 4, 8],
        probs=[
            ["1/2", "1/2", 0],
            ["3/4", 0, "1/4"],
            ["1/4", "1/2", "1/4"],
        ],
    )
    reference = {
        "single_utility": Fraction(2),
        "ambiguous_utility": Fraction(3),
        "ambiguous_action": 3,
        "ambiguous_payment": Fraction(1),
        "first_best": Fraction(3),
        "rho": Fraction(3, 2),
        "rho_hat": Fraction(3, 2),
    }
    return Fixture("example1", inst, reference)


def sop_tight(m: int = 5, delta: RationalLike = Fraction(1, 100)) -> Fixture:
    """
    m free actions, each missing exactly one outcome, and a target of cost 1
    that needs one SOP contract per outcome to be paid at cost.
    """
    if m <= 4:
        raise PreconditionError("sop_tight needs m > 4")
    d = to_fraction(delta)
    if d <= 0 or (m - 2) * d >= m - 1:
        raise PreconditionError("delta must be positive and keep rewards increasing")
    share = Fraction(1, m - 1)
    rewards = [j * d for j in range(m - 1)] + [Fraction(m - 1)]
    probs = [[Fraction(0) if j == i else share for j in range(m)] for i in range(m)]
    probs.append([share * share] * (m - 1) + [1 - share])
    labels = [f"a{i + 1}" for i in range(m)] + ["target"]
    inst = Instance.build([0] * m + [1], rewards, probs, action_labels=labels)
    reference = {
        "target_action": m + 1,
        "target_cost": Fraction(1),
        "min_sop_support": m,
        "single_payment_lower_bound": Fraction(m - 2, m - 3),
    }
    return Fixture("sop_tight", inst, reference)


def monotone_omega(
    n: int = 5,
    eps: RationalLike = Fraction(1, 10),
    gamma: RationalLike = Fraction(1, 100),
    delta: RationalLike = Fraction(1, 100),
) -> Fixture:
    """
    Four outcomes, n actions; a monotone ambiguous pair earns about n - 1
    while every monotone single contract earns little more than 1 + delta * gamma.
    """
    e, g, d = to_fraction(eps), to_fraction(gamma), to_fraction(delta)
    if n < 3:
        raise PreconditionError("monotone_omega needs n >= 3")
    if not (0 < e < 1 and 0 < g <= Fraction(1, 2) and 0 < d < 1):
        raise PreconditionError("need 0 < eps < 1, 0 < gamma <= 1/2 and 0 < delta < 1")
    top = 1 / e ** (n - 2)
    costs = [1 / e ** (i - 1) - i + e * (i - 1) for i in range(1, n)] + [top]
    rewards = [Fraction(0), top, top + g, top + 2 * g]
    probs = [[1 - e ** (n - 1 - i), e ** (n - 1 - i), 0, 0] for i in range(1, n - 1)]
    probs.append([0, 1 - d, d, 0])
    probs.append([0, 0, 0, 1])
    inst = Instance.build(costs, rewards, probs)
    c = costs[n - 2]
    # the slack term vanishes as delta -> 0 but is positive for any fixed delta
    slack = d * (top - c) / ((1 - d) * (1 - e))
    reference = {
        "ambiguous_action": n - 1,
        "ambiguous_lower_bound": n - 1 - e * (n - 2) + d * g,
        "single_upper_bound": 1 + d * g + slack,
        "tau": [
            [Fraction(0), c, c, c],
            [Fraction(0), Fraction(0), c / d, c / d],
        ],
    }
    return Fixture("monotone_omega", inst, reference)


def mlrp_b4() -> Fixture:
    """Four actions with monotone likelihood ratios over six outcomes."""
    inst = Instance.build(
        costs=["0.1", "1", "2", "2.2"],
        rewards=["1", "2", "5", "5.1", "5.2", "5.3"],
        probs=[
            ["0.4", "0.4", "0.2", 0, 0, 0],
            [0, "0.35", "0.35", "0.3", 0, 0],
            [0, 0, "0.4", "0.35", "0.15", "0.1"],
            [0, 0, 0, "0.38", "0.37", "0.25"],
        ],
    )
    reference = {
        "single_utility": Fraction(2987, 1000),
        "single_action": 4,
        "ambiguous_utility": Fraction(3095, 1000),
        "ambiguous_action": 3,
        "tau": [
            [0, 0, 5, 0, 0, 0],
            [0, 0, 0, 0, 0, 20],
        ],
        "low": [1, 2, 3, 4],
        "high": [3, 4, 6, 6],
        "rho": Fraction(3095, 2987),
    }
    return Fixture("mlrp_b4", inst, reference)


FIXTURES: dict[str, Callable[..., Fixture]] = {
    "example1": example1,
    "sop_tight": sop_tight,
    "monotone_omega": monotone_omega,
    "mlrp_b4": mlrp_b4,
}


def gen_fixture(name: str, **params) -> Fixture:
    try:
        factory = FIXTURES[name]
    except KeyError:
        raise PreconditionError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
    return factory(**params)
