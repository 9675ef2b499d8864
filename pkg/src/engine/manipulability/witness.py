"""
Manipulability witnesses.

Two curves that properly cross give a distribution q over rewards on which
both pay the same in expectation. From (t, t', r, q) we build an instance
with one point-mass action per reward and one action distributed as q: the
pair {t, t'} incentivizes the q-action at cost, while no single contract
can incentivize it at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from src.engine.ambiguous.validator import validate
from src.engine.errors import InternalInconsistency, PreconditionError
from src.engine.lp.contracts import implementable
from src.engine.manipulability.curves import ContractCurve, crossing_points
from src.engine.model import (
    AmbiguousContract,
    Contract,
    Instance,
    expected_payment,
    fraction_text,
    to_fraction,
    verify_replication,
)
from src.engine.model.rational import RationalLike
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


def q_from_gaps(gap_above: RationalLike, gap_below: RationalLike) -> tuple[Fraction, Fraction]:
    """Weights (q1, q2) with q1 * gap_above + q2 * gap_below = 0."""
    d1, d2 = to_fraction(gap_above), to_fraction(gap_below)
    if not (d1 > 0 > d2):
        raise PreconditionError(
            f"not a proper crossing: gaps {fraction_text(d1)} and {fraction_text(d2)}"
        )
    return -d2 / (d1 - d2), d1 / (d1 - d2)


def q_from_crossing(
    t: ContractCurve, u: ContractCurve, x1: RationalLike, x2: RationalLike
) -> tuple[Fraction, Fraction]:
    x1, x2 = to_fraction(x1), to_fraction(x2)
    return q_from_gaps(t(x1) - u(x1), t(x2) - u(x2))


@dataclass(frozen=True)
class Witness:
    curves: tuple[ContractCurve, ContractCurve]
    rewards: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    instance: Instance
    tau: AmbiguousContract
    target: int
    crossing: tuple[Fraction, Fraction] | None = None

    @property
    def target_cost(self) -> Fraction:
        return self.instance.costs[self.target]


def build_witness(
    t: ContractCurve,
    u: ContractCurve,
    rewards: Sequence[RationalLike],
    q: Sequence[RationalLike],
    crossing: tuple[Fraction, Fraction] | None = None,
) -> Witness:
    r = [to_fraction(x) for x in rewards]
    qs = [to_fraction(x) for x in q]
    m = len(r)
    if m == 0 or len(qs) != m:
        raise PreconditionError("rewards and q must be nonempty and of equal length")
    if any(x < 0 for x in qs) or sum(qs, Fraction(0)) != 1:
        raise PreconditionError("q must be a probability vector")
    tv, uv = [t(x) for x in r], [u(x) for x in r]
    pay_t = sum((w * a for w, a in zip(qs, tv)), Fraction(0))
    pay_u = sum((w * b for w, b in zip(qs, uv)), Fraction(0))
    if pay_t != pay_u:
        raise PreconditionError(
            f"curves are not balanced under q: {fraction_text(pay_t)} vs {fraction_text(pay_u)}"
        )
    if not any(w > 0 and a != b for w, a, b in zip(qs, tv, uv)):
        raise PreconditionError("curves agree on the support of q")

    probs = [[Fraction(int(k == j)) for k in range(m)] for j in range(m)] + [qs]
    costs = [min(a, b) for a, b in zip(tv, uv)] + [pay_t]
    labels = [f"e{j + 1}" for j in range(m)] + ["target"]
    inst = Instance.build(costs, r, probs, action_labels=labels)

    target = inst.action_origin.index(m)
    sorted_of = {origin: k for k, origin in enumerate(inst.action_origin)}
    tau = AmbiguousContract.of([
        Contract(tuple(t(x) for x in inst.rewards)),
        Contract(tuple(u(x) for x in inst.rewards)),
    ])

    certificate = validate(inst, tau, target)
    weights = {sorted_of[j]: w for j, w in enumerate(qs) if w > 0}
    problems = []
    if not certificate.passed:
        problems.append("ambiguous pair does not incentivize the target")
    if any(expected_payment(inst, target, c) != inst.costs[target] for c in tau):
        problems.append("target is not paid at cost")
    if implementable(inst, target):
        problems.append("target is implementable by a single contract")
    if not verify_replication(inst, target, weights):
        problems.append("q does not replicate the target more cheaply")
    if problems:
        raise InternalInconsistency("witness verification failed", {"problems": problems})

    logger.debug("witness built: target cost %s, q=%s", fraction_text(pay_t), [fraction_text(w) for w in qs])
    return Witness((t, u), tuple(r), tuple(qs), inst, tau, target, crossing)


def witness_from_crossing(
    t: ContractCurve,
    u: ContractCurve,
    grid: Sequence[RationalLike],
    rewards: Sequence[RationalLike] | None = None,
) -> Witness | None:
    """
    Witness from the first proper crossing on `grid`, or None. Without
    `rewards` the instance has exactly the two crossing rewards; otherwise
    q is placed on the crossing points inside `rewards`, which must
    contain them.
    """
    points = crossing_points(t, u, grid)
    if points is None:
        return None
    x1, x2 = points
    q1, q2 = q_from_crossing(t, u, x1, x2)
    if rewards is None:
        return build_witness(t, u, (x1, x2), (q1, q2), points)
    r = [to_fraction(x) for x in rewards]
    if x1 not in r or x2 not in r:
        raise PreconditionError("rewards must contain both crossing points")
    q = [Fraction(0)] * len(r)
    q[r.index(x1)] = q1
    q[r.index(x2)] = q2
    return build_witness(t, u, r, q, points)


def sop_as_polynomial(j: int, amount: RationalLike, rewards: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    """
    Coefficients (ascending powers) of a polynomial paying `amount` at
    rewards[j] and 0 at every other reward. It is a scaled product of
    squares, so it is nonnegative for every x, though individual
    coefficients may be negative.
    """
    r = [to_fraction(x) for x in rewards]
    if not 0 <= j < len(r):
        raise PreconditionError(f"outcome index {j} out of range")
    if any(x == r[j] for k, x in enumerate(r) if k != j):
        raise PreconditionError("rewards must be distinct from the paid reward")
    x = sympy.Symbol("x")
    points = [sympy.Rational(v.numerator, v.denominator) for v in r]
    a = to_fraction(amount)
    f = sympy.Mul(*[(x - p) ** 2 for k, p in enumerate(points) if k != j])
    g = sympy.expand(sympy.Rational(a.numerator, a.denominator) * f / f.subs(x, points[j]))
    coeffs = sympy.Poly(g, x).all_coeffs()[::-1]
    return tuple(Fraction(int(c.p), int(c.q)) for c in coeffs)
