"""
Instances whose ambiguity gap grows without bound.

Layers of diagonal action sets are stacked with harmonic cost increments so
that every single contract earns the principal at most u_bar, while a
costly target action (R = 1, cost 1 - delta) can be incentivized at cost by
a pair of SOP contracts but by no single contract. u_bar is located with a
floating bisection and then rationalized; everything the construction
promises is re-verified exactly on the generated instance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
from joblib import Parallel, delayed

from src.engine.ambiguous.validator import validate
from src.engine.errors import InternalInconsistency, PreconditionError
from src.engine.gap.generators import DiagonalParams, gen_diagonal
from src.engine.lp.contracts import min_payment
from src.engine.model import (
    AmbiguousContract,
    Contract,
    Instance,
    expected_payment,
    expected_reward,
    fraction_text,
    subinstance,
    to_fraction,
    verify_replication,
    welfare,
)
from src.engine.model.rational import RationalLike
from src.utils.core.config_helpers import UnboundedSettings
from src.utils.core.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class UnboundedParams:
    x: int
    delta: Fraction
    rewards: tuple[Fraction, ...]
    target_probs: tuple[Fraction, ...]
    u_bar: Fraction
    length: Fraction
    layer_costs: tuple[Fraction, ...]
    layer_rewards: tuple[Fraction, ...]
    # layer_actions[l][j - 1] is the sorted index of the layer-l action on outcome j (j >= 1)
    layer_actions: tuple[tuple[int, ...], ...]
    base_action: int
    target: int
    amplified: bool
    alpha: dict[int, Fraction] = field(hash=False)
    tau_star: AmbiguousContract = field(hash=False)
    attempts: int = 1

    @property
    def m(self) -> int:
        return len(self.rewards)

    @property
    def target_cost(self) -> Fraction:
        return 1 - self.delta

    @property
    def regular_layers(self) -> int:
        return len(self.layer_costs) - int(self.amplified)

    @property
    def rho_lower_bound(self) -> Fraction:
        return self.delta / self.u_bar


def default_target_probs(rewards: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Equal share of expected reward from every outcome j >= 2, rest on outcome 1."""
    m = len(rewards)
    tail = [1 / ((m - 1) * r) for r in rewards[1:]]
    return (1 - sum(tail, Fraction(0)), *tail)


def _check_inputs(x: int, delta: Fraction, rewards: Sequence[Fraction], target_probs: Sequence[Fraction]) -> None:
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise PreconditionError(f"x must be a positive integer, got {x!r}")
    if not 0 < delta < 1:
        raise PreconditionError("delta must lie in (0, 1)")
    if len(rewards) < 3:
        raise PreconditionError("the construction needs at least three outcomes")
    if rewards[0] != 0 or rewards[1] < 1:
        raise PreconditionError("rewards need r_1 = 0 and r_2 >= 1")
    if any(a >= b for a, b in zip(rewards, rewards[1:])):
        raise PreconditionError("rewards must be strictly increasing")
    if len(target_probs) != len(rewards):
        raise PreconditionError("target distribution does not match the outcomes")
    if any(p <= 0 for p in target_probs) or sum(target_probs, Fraction(0)) != 1:
        raise PreconditionError("target distribution must have full support and sum to 1")
    if sum((p * r for p, r in zip(target_probs, rewards)), Fraction(0)) != 1:
        raise PreconditionError("target distribution must have expected reward exactly 1")
    if delta >= math.exp(-1 / (2 * x)):
        raise PreconditionError(f"delta must be below exp(-1/(2x)) for x = {x}")


def locate_u_bar(x: int, delta: Fraction, tol: float = 1e-12) -> mpmath.mpf:
    """
    Bisection for u + u*ln(1/u) - u/(2x) = delta on (0, exp(-1/(2x))).
    Returns the upper end of the final bracket, where the left side is >= delta.
    """
    with mpmath.workdps(40):
        d = mpmath.mpf(delta.numerator) / delta.denominator

        def excess(u):
            return u + u * mpmath.log(1 / u) - u / (2 * x) - d

        lo, hi = mpmath.mpf(0), mpmath.exp(mpmath.mpf(-1) / (2 * x))
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if excess(mid) < 0:
                lo = mid
            else:
                hi = mid
        return +hi


def _rationalize(value: mpmath.mpf, max_denominator: int) -> Fraction:
    return Fraction(mpmath.nstr(value, 30, min_fixed=-50, max_fixed=50)).limit_denominator(max_denominator)


def _layers(x: int, u: Fraction) -> tuple[list[Fraction], list[Fraction], Fraction, bool]:
    length = x * (1 - u) / u
    last = math.floor(length)
    costs, levels = [Fraction(0)], [u]
    for step in range(1, last + 1):
        costs.append(costs[-1] + u * (Fraction(1, x) - Fraction(1, x + step)))
        levels.append(u + step * u / x)
    amplified = length != last
    if amplified:
        costs.append(costs[-1] + (1 - levels[-1]) * (1 - u))
        levels.append(Fraction(1))
    return costs, levels, length, amplified


def _assemble(
    x: int,
    delta: Fraction,
    rewards: tuple[Fraction, ...],
    target_probs: tuple[Fraction, ...],
    u: Fraction,
    attempt: int,
) -> tuple[Instance, UnboundedParams]:
    m = len(rewards)
    costs, levels, length, amplified = _layers(x, u)

    all_costs: list[Fraction] = [Fraction(0)]
    all_probs: list[tuple[Fraction, ...]] = [tuple(Fraction(int(k == 0)) for k in range(m))]
    labels = ["base"]
    for layer, (c, level) in enumerate(zip(costs, levels)):
        rows = gen_diagonal(DiagonalParams(rewards, level - c, c))
        for j in range(1, m):
            all_costs.append(c)
            all_probs.append(rows.probs[j])
            labels.append(f"L{layer}.o{j + 1}")
    all_costs.append(1 - delta)
    all_probs.append(target_probs)
    labels.append("target")

    inst = Instance.build(all_costs, rewards, all_probs, action_labels=labels)
    sorted_of = {origin: k for k, origin in enumerate(inst.action_origin)}
    layer_actions = tuple(
        tuple(sorted_of[1 + layer * (m - 1) + (j - 1)] for j in range(1, m))
        for layer in range(len(costs))
    )
    target = sorted_of[len(all_costs) - 1]
    alpha = {layer_actions[-1][j - 1]: target_probs[j] * rewards[j] for j in range(1, m)}
    c_star = 1 - delta
    tau_star = AmbiguousContract.of([
        Contract.sop(m, 1, c_star / target_probs[1]),
        Contract.sop(m, m - 1, c_star / target_probs[m - 1]),
    ])
    params = UnboundedParams(
        x=x,
        delta=delta,
        rewards=rewards,
        target_probs=target_probs,
        u_bar=u,
        length=length,
        layer_costs=tuple(costs),
        layer_rewards=tuple(levels),
        layer_actions=layer_actions,
        base_action=sorted_of[0],
        target=target,
        amplified=amplified,
        alpha=alpha,
        tau_star=tau_star,
        attempts=attempt,
    )
    return inst, params


def verify_unbounded(inst: Instance, params: UnboundedParams) -> list[str]:
    """Exact checks the construction promises; returns the failed ones."""
    problems = []
    c_star = params.target_cost
    if not params.layer_costs[-1] < c_star:
        problems.append(
            f"last layer cost {fraction_text(params.layer_costs[-1])} is not below {fraction_text(c_star)}"
        )
    if params.layer_rewards[-1] != 1:
        problems.append("last layer does not reach expected reward 1")
    if not verify_replication(inst, params.target, params.alpha):
        problems.append("last layer does not replicate the target more cheaply")
    if not validate(inst, params.tau_star, params.target).passed:
        problems.append("the SOP pair does not incentivize the target")
    elif any(expected_payment(inst, params.target, t) != c_star for t in params.tau_star):
        problems.append("the SOP pair does not pay the target at cost")
    return problems


def gen_unbounded_gap(
    x: int,
    delta: RationalLike,
    rewards: Sequence[RationalLike] | None = None,
    target_probs: Sequence[RationalLike] | None = None,
    m: int = 3,
    settings: UnboundedSettings | None = None,
) -> tuple[Instance, UnboundedParams]:
    settings = settings or UnboundedSettings()
    d = to_fraction(delta)
    r = tuple(to_fraction(v) for v in rewards) if rewards is not None else tuple(Fraction(k) for k in range(m))
    p = tuple(to_fraction(v) for v in target_probs) if target_probs is not None else default_target_probs(r)
    _check_inputs(x, d, r, p)

    root = locate_u_bar(x, d, settings.bisection_tol)
    failures: list[dict] = []
    for attempt in range(settings.max_retries + 1):
        # c_L falls as u_bar grows, so a failed cost check is retried higher
        candidate = root * (1 + mpmath.mpf(settings.nudge) * attempt)
        u = _rationalize(candidate, settings.max_denominator)
        if not 0 < u < d:
            failures.append({"attempt": attempt + 1, "u_bar": fraction_text(u), "problems": ["u_bar out of range"]})
            continue
        inst, params = _assemble(x, d, r, p, u, attempt + 1)
        problems = verify_unbounded(inst, params)
        if not problems:
            logger.info(
                "unbounded instance: x=%d delta=%s u_bar~%s layers=%d actions=%d",
                x, fraction_text(d), mpmath.nstr(candidate, 8), params.regular_layers, inst.n,
            )
            return inst, params
        logger.warning("attempt %d with u_bar=%s failed: %s", attempt + 1, fraction_text(u), "; ".join(problems))
        failures.append({"attempt": attempt + 1, "u_bar": fraction_text(u), "problems": problems})

    raise InternalInconsistency(
        "unbounded-gap construction could not be verified",
        {"x": x, "delta": fraction_text(d), "attempts": failures},
    )


# ---------------------------------------------------------------------------
# Post-hoc checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimCheck:
    """Largest single-contract utility bound found and the actions above u_bar."""

    max_utility: Fraction
    violations: tuple[tuple[str, Fraction], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def _pair_utility(inst: Instance, previous: int, current: int) -> Fraction | None:
    pair = subinstance(inst, (previous, current))
    result = min_payment(pair, 1)
    if not result.feasible:
        return None
    return expected_reward(pair, 1) - result.payment


def claim_invariant_check(inst: Instance, params: UnboundedParams, threads: int = 1) -> ClaimCheck:
    """
    Bound the single-contract utility of every non-target action by its LP
    against the matching action one layer down; dropping the other actions
    can only help the principal, so the bound is valid on the full instance.
    """
    bounds: dict[int, Fraction] = {params.base_action: welfare(inst, params.base_action)}
    for k in params.layer_actions[0]:
        bounds[k] = welfare(inst, k)

    pairs = [
        (below, above)
        for lower, upper in zip(params.layer_actions, params.layer_actions[1:])
        for below, above in zip(lower, upper)
    ]
    if threads > 1 and len(pairs) > 1:
        values = Parallel(n_jobs=threads, prefer="threads")(
            delayed(_pair_utility)(inst, a, b) for a, b in pairs
        )
    else:
        values = [_pair_utility(inst, a, b) for a, b in pairs]
    for (_, above), value in zip(pairs, values):
        # not implementable even against one action
        bounds[above] = value if value is not None else Fraction(0)

    violations = tuple(
        (inst.label(k), value) for k, value in sorted(bounds.items()) if value > params.u_bar
    )
    return ClaimCheck(max(bounds.values()), violations)


def harmonic_bound_check(params: UnboundedParams, dps: int = 50) -> list[int]:
    """
    Regular layers whose cost is not certified to lie strictly below
    u_bar * (l/x - ln((x+l)/x) + 1/(2x)) under interval arithmetic.
    """
    iv = mpmath.iv
    failing = []
    saved = iv.dps
    iv.dps = dps
    try:
        x = iv.mpf(params.x)
        u = iv.mpf(params.u_bar.numerator) / params.u_bar.denominator
        for layer in range(params.regular_layers):
            c = params.layer_costs[layer]
            cost = iv.mpf(c.numerator) / c.denominator
            bound = u * (layer / x - (iv.log((x + layer) / x) - 1 / (2 * x)))
            if not bool(cost.b < bound.a):
                failing.append(layer)
    finally:
        iv.dps = saved
    return failing


def suggest_delta(z: RationalLike, x: int, resolution: int = 1000) -> Fraction:
    """
    A delta for which -W_{-1}(-delta / e^(1 - 1/(2x))) is at least z, rounded
    down to a multiple of 1/resolution. Guidance only: the construction
    re-verifies everything it relies on.
    """
    target = to_fraction(z)
    if target <= 1:
        raise PreconditionError("the target ratio must exceed 1")
    if x < 1:
        raise PreconditionError("x must be a positive integer")
    with mpmath.workdps(30):
        scale = mpmath.exp(1 - mpmath.mpf(1) / (2 * x))
        goal = mpmath.mpf(target.numerator) / target.denominator

        def ratio(d):
            return -mpmath.re(mpmath.lambertw(-d / scale, -1))

        lo, hi = mpmath.mpf(0), mpmath.exp(mpmath.mpf(-1) / (2 * x))
        for _ in range(200):
            mid = (lo + hi) / 2
            if ratio(mid) >= goal:
                lo = mid
            else:
                hi = mid
        steps = int(mpmath.floor(lo * resolution))
    if steps < 1:
        raise PreconditionError(f"no delta on a 1/{resolution} grid reaches ratio {fraction_text(target)}")
    return Fraction(steps, resolution)
