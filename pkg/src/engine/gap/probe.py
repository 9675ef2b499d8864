"""
Randomized check that full surplus extraction never beats the best single
contract by more than a factor of two when actions have only two costs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from src.engine.errors import InternalInconsistency
from src.engine.gap.generators import gen_two_effort_gap
from src.engine.gap.metrics import GapStatus, ambiguity_gap
from src.engine.model import Instance, fraction_text
from src.utils.core.config_helpers import ProbeSettings, spawn_streams
from src.utils.core.logger import get_logger

logger = get_logger(__name__)

BOUND = Fraction(2)


def _random_row(rng: np.random.Generator, m: int, max_denominator: int) -> list[Fraction]:
    weights = rng.integers(0, max_denominator + 1, size=m)
    if not weights.any():
        weights[rng.integers(0, m)] = 1
    total = int(weights.sum())
    return [Fraction(int(w), total) for w in weights]


def random_two_effort_instance(rng: np.random.Generator, settings: ProbeSettings) -> Instance:
    """
    Random instance whose costs are 0 or a single c_h in (0, max R). At least
    one action has each cost; entries have small denominators.
    """
    n = int(rng.integers(2, settings.max_actions + 1))
    m = int(rng.integers(2, settings.max_outcomes + 1))
    den = settings.max_denominator
    steps = np.sort(rng.integers(0, 4 * den + 1, size=m))
    rewards = [Fraction(int(s), den) for s in steps]
    probs = [_random_row(rng, m, den) for _ in range(n)]

    r_max = max(sum((p * r for p, r in zip(row, rewards)), Fraction(0)) for row in probs)
    if r_max > 0:
        c_high = r_max * Fraction(int(rng.integers(1, den)), den) if den > 1 else r_max / 2
    else:
        c_high = Fraction(1, 2)
    high = [False, True] + [bool(b) for b in rng.integers(0, 2, size=n - 2)]
    costs = [c_high if h else Fraction(0) for h in high]
    return Instance.build(costs, rewards, probs)


@dataclass(frozen=True)
class ProbeRecord:
    trial: int
    n: int
    m: int
    rho: Fraction | None
    rho_hat: Fraction | None
    note: str = ""

    def as_dict(self) -> dict[str, Any]:
        return {
            "trial": self.trial,
            "n": self.n,
            "m": self.m,
            "rho": fraction_text(self.rho) if self.rho is not None else None,
            "rho_hat": fraction_text(self.rho_hat) if self.rho_hat is not None else None,
            "note": self.note,
        }


@dataclass(frozen=True)
class ProbeReport:
    trials: int
    seed: int
    max_rho_hat: Fraction
    max_rho: Fraction
    records: tuple[ProbeRecord, ...] = field(default_factory=tuple)


def _measure(trial: int, inst: Instance, note: str = "") -> ProbeRecord:
    report = ambiguity_gap(inst)
    if report.status == GapStatus.INFINITE:
        # nothing to extract: first-best equals second-best
        if report.first_best <= 0:
            return ProbeRecord(trial, inst.n, inst.m, Fraction(1), Fraction(1), "trivial")
        return ProbeRecord(trial, inst.n, inst.m, None, None, "infinite")
    return ProbeRecord(trial, inst.n, inst.m, report.rho, report.rho_hat, note)


def _violation(record: ProbeRecord) -> str | None:
    if record.rho_hat is None:
        return "best single contract earns nothing while the first-best is positive"
    if record.rho_hat > BOUND:
        return f"rho_hat = {fraction_text(record.rho_hat)} exceeds 2"
    if not Fraction(1) <= record.rho <= record.rho_hat:
        return f"rho = {fraction_text(record.rho)} outside [1, rho_hat]"
    return None


def two_effort_upper_bound_probe(
    settings: ProbeSettings | None = None,
    threads: int = 1,
    include_reference: bool = True,
    show_progress: bool = False,
) -> ProbeReport:
    settings = settings or ProbeSettings()
    streams = spawn_streams(settings.seed, settings.trials)
    instances = [random_two_effort_instance(rng, settings) for rng in streams]

    jobs = tqdm(
        list(enumerate(instances, start=1)),
        desc="two-effort probe",
        disable=not show_progress,
    )
    if threads > 1:
        records = Parallel(n_jobs=threads, prefer="threads")(
            delayed(_measure)(trial, inst) for trial, inst in jobs
        )
    else:
        records = [_measure(trial, inst) for trial, inst in jobs]
    if include_reference:
        records.append(_measure(0, gen_two_effort_gap(Fraction(1, 100), Fraction(2, 100)), "reference"))

    violations = [(r, reason) for r in records if (reason := _violation(r))]
    if violations:
        raise InternalInconsistency(
            "two-effort bound violated",
            {
                "seed": settings.seed,
                "violations": [dict(r.as_dict(), reason=reason) for r, reason in violations],
            },
        )

    max_rho_hat = max(r.rho_hat for r in records)
    max_rho = max(r.rho for r in records)
    logger.info(
        "probe: %d trials, max rho_hat=%s, max rho=%s",
        len(records), fraction_text(max_rho_hat), fraction_text(max_rho),
    )
    return ProbeReport(settings.trials, settings.seed, max_rho_hat, max_rho, tuple(records))


def probe_rows(report: ProbeReport) -> list[dict[str, Any]]:
    return [r.as_dict() for r in report.records]
