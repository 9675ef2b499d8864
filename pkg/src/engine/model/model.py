"""
Core domain types of the hidden-action model and the value functions on them.

Indices are 0-based everywhere in the engine and refer to the sorted instance
(costs and rewards ascending). `Instance.action_origin[i]` maps back to the
position in the caller's input; the CLI reports that one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence

from src.engine.errors import ContractError, InstanceError
from src.engine.model.rational import RationalLike, fraction_text, to_fraction

if TYPE_CHECKING:
    from src.engine.ambiguous.waterfill import WaterLevel


@dataclass(frozen=True)
class Instance:
    """
    A principal-agent setting (c, r, p).

    Use `Instance.build` for raw input: it coerces to Fractions and sorts
    actions by cost and outcomes by reward (stable), remembering where every
    row and column came from.
    """

    costs: tuple[Fraction, ...]
    rewards: tuple[Fraction, ...]
    probs: tuple[tuple[Fraction, ...], ...]
    action_labels: tuple[str, ...] = ()
    outcome_labels: tuple[str, ...] = ()
    action_origin: tuple[int, ...] = ()
    outcome_origin: tuple[int, ...] = ()

    def __post_init__(self):
        n, m = len(self.costs), len(self.rewards)
        if n < 1 or m < 1:
            raise InstanceError(f"need at least one action and one outcome, got n={n}, m={m}")
        if len(self.probs) != n:
            raise InstanceError(f"probs has {len(self.probs)} rows for {n} actions")
        for i, row in enumerate(self.probs):
            if len(row) != m:
                raise InstanceError(f"row {i} has {len(row)} entries, expected {m}")
            if any(p < 0 or p > 1 for p in row):
                raise InstanceError(f"row {i} has an entry outside [0, 1]")
            total = sum(row, Fraction(0))
            if total != 1:
                raise InstanceError(f"row {i} sums to {fraction_text(total)}, expected 1")
        if any(c < 0 for c in self.costs):
            raise InstanceError("negative cost")
        if any(r < 0 for r in self.rewards):
            raise InstanceError("negative reward")
        if any(a > b for a, b in zip(self.costs, self.costs[1:])):
            raise InstanceError("costs are not sorted; use Instance.build")
        if any(a > b for a, b in zip(self.rewards, self.rewards[1:])):
            raise InstanceError("rewards are not sorted; use Instance.build")

        # fill defaults for directly constructed (already sorted) instances
        if not self.action_origin:
            object.__setattr__(self, "action_origin", tuple(range(n)))
        if not self.outcome_origin:
            object.__setattr__(self, "outcome_origin", tuple(range(m)))
        if not self.action_labels:
            object.__setattr__(self, "action_labels", tuple(f"a{k + 1}" for k in self.action_origin))
        if not self.outcome_labels:
            object.__setattr__(self, "outcome_labels", tuple(f"o{k + 1}" for k in self.outcome_origin))
        if len(self.action_labels) != n or len(self.action_origin) != n:
            raise InstanceError("action labels/origins do not match the number of actions")
        if len(self.outcome_labels) != m or len(self.outcome_origin) != m:
            raise InstanceError("outcome labels/origins do not match the number of outcomes")

    @classmethod
    def build(
        cls,
        costs: Sequence[RationalLike],
        rewards: Sequence[RationalLike],
        probs: Sequence[Sequence[RationalLike]],
        action_labels: Sequence[str] | None = None,
        outcome_labels: Sequence[str] | None = None,
    ) -> Instance:
        c = [to_fraction(v) for v in costs]
        r = [to_fraction(v) for v in rewards]
        p = [[to_fraction(v) for v in row] for row in probs]
        n, m = len(c), len(r)
        if len(p) != n:
            raise InstanceError(f"probs has {len(p)} rows for {n} actions")
        for i, row in enumerate(p):
            if len(row) != m:
                raise InstanceError(f"row {i} has {len(row)} entries, expected {m}")

        a_labels = list(action_labels) if action_labels else [f"a{k + 1}" for k in range(n)]
        o_labels = list(outcome_labels) if outcome_labels else [f"o{k + 1}" for k in range(m)]
        if len(a_labels) != n or len(o_labels) != m:
            raise InstanceError("label count does not match the matrix shape")

        a_order = sorted(range(n), key=lambda k: c[k])
        o_order = sorted(range(m), key=lambda k: r[k])
        return cls(
            costs=tuple(c[k] for k in a_order),
            rewards=tuple(r[k] for k in o_order),
            probs=tuple(tuple(p[a][o] for o in o_order) for a in a_order),
            action_labels=tuple(a_labels[k] for k in a_order),
            outcome_labels=tuple(o_labels[k] for k in o_order),
            action_origin=tuple(a_order),
            outcome_origin=tuple(o_order),
        )

    @property
    def n(self) -> int:
        return len(self.costs)

    @property
    def m(self) -> int:
        return len(self.rewards)

    def support(self, i: int) -> list[int]:
        """Outcomes with positive probability under action i, ascending."""
        check_action(self, i)
        return [j for j, p in enumerate(self.probs[i]) if p > 0]

    def tail(self, i: int, j: int) -> Fraction:
        """Probability of an outcome at index j or above under action i."""
        return sum(self.probs[i][j:], Fraction(0))

    def original_order(self) -> tuple[list, list, list, list[str], list[str]]:
        """Rows and columns back in the caller's order (inverse of `build`)."""
        a_inv = sorted(range(self.n), key=lambda k: self.action_origin[k])
        o_inv = sorted(range(self.m), key=lambda k: self.outcome_origin[k])
        return (
            [self.costs[k] for k in a_inv],
            [self.rewards[k] for k in o_inv],
            [[self.probs[a][o] for o in o_inv] for a in a_inv],
            [self.action_labels[k] for k in a_inv],
            [self.outcome_labels[k] for k in o_inv],
        )

    def label(self, i: int) -> str:
        return self.action_labels[i]


def check_action(inst: Instance, i: int) -> None:
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < inst.n:
        raise InstanceError(f"action index {i!r} out of range for n={inst.n}")


@dataclass(frozen=True, order=True)
class Contract:
    """A limited-liability payment vector over outcomes."""

    payments: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.payments:
            raise ContractError("empty contract")
        if any(t < 0 for t in self.payments):
            raise ContractError("negative payment violates limited liability")

    @classmethod
    def of(cls, payments: Iterable[RationalLike]) -> Contract:
        try:
            return cls(tuple(to_fraction(t) for t in payments))
        except InstanceError as e:
            raise ContractError(str(e)) from e

    @classmethod
    def zero(cls, m: int) -> Contract:
        return cls(tuple(Fraction(0) for _ in range(m)))

    @classmethod
    def sop(cls, m: int, j: int, amount: Fraction) -> Contract:
        """Pay `amount` at outcome j only."""
        if not 0 <= j < m:
            raise ContractError(f"outcome index {j} out of range for m={m}")
        return cls(tuple(Fraction(amount) if k == j else Fraction(0) for k in range(m)))

    @classmethod
    def step(cls, m: int, k: int, amount: Fraction) -> Contract:
        """Pay 0 below outcome k and `amount` from k on."""
        if not 0 <= k < m:
            raise ContractError(f"outcome index {k} out of range for m={m}")
        return cls(tuple(Fraction(amount) if j >= k else Fraction(0) for j in range(m)))

    @property
    def m(self) -> int:
        return len(self.payments)

    def __len__(self) -> int:
        return len(self.payments)

    def __getitem__(self, j: int) -> Fraction:
        return self.payments[j]

    def text(self) -> list[str]:
        return [fraction_text(t) for t in self.payments]


@dataclass(frozen=True)
class AmbiguousContract:
    """A committed finite set of contracts; a singleton is the classic case."""

    contracts: tuple[Contract, ...]

    def __post_init__(self):
        if not self.contracts:
            raise ContractError("ambiguous contract needs at least one contract")
        m = self.contracts[0].m
        if any(t.m != m for t in self.contracts):
            raise ContractError("contracts of different lengths")
        if len(set(self.contracts)) != len(self.contracts):
            raise ContractError("duplicate contracts")

    @classmethod
    def of(cls, contracts: Iterable[Contract | Sequence[RationalLike]]) -> AmbiguousContract:
        """Build from contracts or raw vectors, merging exact duplicates (first wins)."""
        seen: dict[Contract, None] = {}
        for t in contracts:
            seen.setdefault(t if isinstance(t, Contract) else Contract.of(t), None)
        return cls(tuple(seen))

    @classmethod
    def single(cls, t: Contract) -> AmbiguousContract:
        return cls((t,))

    @property
    def m(self) -> int:
        return self.contracts[0].m

    def __len__(self) -> int:
        return len(self.contracts)

    def __iter__(self) -> Iterator[Contract]:
        return iter(self.contracts)

    def text(self) -> list[list[str]]:
        return [t.text() for t in self.contracts]


def _check_contract(inst: Instance, t: Contract) -> None:
    if t.m != inst.m:
        raise ContractError(f"contract has {t.m} payments, instance has {inst.m} outcomes")


def expected_reward(inst: Instance, i: int) -> Fraction:
    check_action(inst, i)
    return sum((p * r for p, r in zip(inst.probs[i], inst.rewards)), Fraction(0))


def welfare(inst: Instance, i: int) -> Fraction:
    return expected_reward(inst, i) - inst.costs[i]


def expected_payment(inst: Instance, i: int, t: Contract) -> Fraction:
    check_action(inst, i)
    _check_contract(inst, t)
    return sum((p * x for p, x in zip(inst.probs[i], t.payments)), Fraction(0))


def agent_utility(inst: Instance, i: int, t: Contract) -> Fraction:
    return expected_payment(inst, i, t) - inst.costs[i]


def principal_utility(inst: Instance, i: int, t: Contract) -> Fraction:
    return expected_reward(inst, i) - expected_payment(inst, i, t)


def best_response(inst: Instance, t: Contract) -> int:
    """Agent's choice under a single contract: max U_A, then max U_P, then lowest index."""
    _check_contract(inst, t)
    return max(
        range(inst.n),
        key=lambda i: (agent_utility(inst, i, t), principal_utility(inst, i, t), -i),
    )


def maxmin_utility(inst: Instance, i: int, tau: AmbiguousContract) -> Fraction:
    return min(agent_utility(inst, i, t) for t in tau)


def maxmin_best_response(inst: Instance, tau: AmbiguousContract) -> int:
    """
    Agent's choice under an ambiguous contract: max of the worst-case utility.

    Ties go to the action with the larger R_i - max_t T_i(t), then to the
    lowest index.
    """
    for t in tau:
        _check_contract(inst, t)

    def key(i: int):
        payments = [expected_payment(inst, i, t) for t in tau]
        return (min(payments) - inst.costs[i], expected_reward(inst, i) - max(payments), -i)

    return max(range(inst.n), key=key)


def is_consistent(inst: Instance, tau: AmbiguousContract, i: int) -> bool:
    payments = {expected_payment(inst, i, t) for t in tau}
    return len(payments) == 1


def has_proper_crossing(t: Contract, u: Contract) -> bool:
    if t.m != u.m:
        raise ContractError("contracts of different lengths")
    above = any(a > b for a, b in zip(t.payments, u.payments))
    below = any(a < b for a, b in zip(t.payments, u.payments))
    return above and below


def dominates(t: Contract, u: Contract) -> bool:
    """t pays at least as much as u everywhere and differs somewhere."""
    return t != u and all(a >= b for a, b in zip(t.payments, u.payments))


def prune_dominated(tau: AmbiguousContract) -> AmbiguousContract:
    """Drop dominating contracts (lexicographically largest first) until all pairs cross."""
    remaining = list(tau.contracts)
    while True:
        dominating = [t for t in remaining if any(dominates(t, u) for u in remaining)]
        if not dominating:
            return AmbiguousContract(tuple(remaining))
        remaining.remove(max(dominating))


@dataclass(frozen=True)
class ActionRow:
    index: int
    label: str
    origin: int
    cost: Fraction
    reward: Fraction
    welfare: Fraction


def action_table(inst: Instance) -> list[ActionRow]:
    return [
        ActionRow(
            index=i,
            label=inst.action_labels[i],
            origin=inst.action_origin[i],
            cost=inst.costs[i],
            reward=expected_reward(inst, i),
            welfare=welfare(inst, i),
        )
        for i in range(inst.n)
    ]


def verify_replication(inst: Instance, i: int, weights: Mapping[int, Fraction]) -> bool:
    """
    True iff `weights` is a convex combination of the other actions that
    reproduces p_i exactly at a strictly lower expected cost. Such a
    combination certifies that i is not implementable by a single contract.
    """
    check_action(inst, i)
    if not weights or i in weights:
        return False
    for k, w in weights.items():
        check_action(inst, k)
        if w < 0:
            return False
    if sum(weights.values(), Fraction(0)) != 1:
        return False
    for j in range(inst.m):
        mixed = sum((w * inst.probs[k][j] for k, w in weights.items()), Fraction(0))
        if mixed != inst.probs[i][j]:
            return False
    cost = sum((w * inst.costs[k] for k, w in weights.items()), Fraction(0))
    return cost < inst.costs[i]


def subinstance(inst: Instance, actions: Iterable[int]) -> Instance:
    """Keep only the given actions (sorted order preserved)."""
    keep = sorted(set(actions))
    if not keep:
        raise InstanceError("subinstance needs at least one action")
    for i in keep:
        check_action(inst, i)
    return Instance(
        costs=tuple(inst.costs[i] for i in keep),
        rewards=inst.rewards,
        probs=tuple(inst.probs[i] for i in keep),
        action_labels=tuple(inst.action_labels[i] for i in keep),
        outcome_labels=inst.outcome_labels,
        action_origin=tuple(inst.action_origin[i] for i in keep),
        outcome_origin=inst.outcome_origin,
    )


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


class CheckStatus(str, Enum):
    PASS = "pass"
    WARN = "warn"
    FAIL = "fail"


@dataclass(frozen=True)
class CertificateItem:
    name: str
    status: CheckStatus
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    """Itemized verification of consistency, IC and IR for a target action."""

    items: tuple[CertificateItem, ...] = ()

    @property
    def passed(self) -> bool:
        return all(item.status != CheckStatus.FAIL for item in self.items)

    def failures(self) -> list[CertificateItem]:
        return [item for item in self.items if item.status == CheckStatus.FAIL]

    def item(self, name: str) -> CertificateItem | None:
        return next((it for it in self.items if it.name == name), None)

    @property
    def tie_break_ok(self) -> bool | None:
        """False when another action ties and the agent would pick it instead."""
        item = self.item("tie_break")
        return None if item is None else item.status == CheckStatus.PASS


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    NOT_MONOTONE_IMPLEMENTABLE = "not_monotone_implementable"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    action: int | None = None
    expected_payment: Fraction | None = None
    agent_utility: Fraction | None = None
    principal_utility: Fraction | None = None
    contract_payments: tuple[Fraction, ...] = ()
    contracts: AmbiguousContract | None = None
    certificate: Certificate | None = None
    water_level: WaterLevel | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.status == SolveStatus.OPTIMAL

    @classmethod
    def from_contracts(
        cls,
        inst: Instance,
        i: int,
        tau: AmbiguousContract,
        certificate: Certificate | None = None,
        water_level: WaterLevel | None = None,
    ) -> SolveResult:
        payments = tuple(expected_payment(inst, i, t) for t in tau)
        worst = max(payments)
        return cls(
            status=SolveStatus.OPTIMAL,
            action=i,
            expected_payment=worst,
            agent_utility=min(payments) - inst.costs[i],
            principal_utility=expected_reward(inst, i) - worst,
            contract_payments=payments,
            contracts=tau,
            certificate=certificate,
            water_level=water_level,
        )

    @classmethod
    def unavailable(cls, status: SolveStatus, action: int | None = None) -> SolveResult:
        return cls(status=status, action=action)
