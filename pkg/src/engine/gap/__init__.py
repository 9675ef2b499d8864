"""
Gap - 模糊合同收益差距度量与论文实例生成器

- metrics: ρ / ρ̂ 与一阶最优
- generators: 对角动作集与两档努力 2−ε 构造
- unbounded: 调和成本分层的无界差距构造及其精确校验
- fixtures: 具名参考实例
- probe: 两档努力随机上界探针
"""

from .fixtures import FIXTURES, Fixture, example1, gen_fixture, mlrp_b4, monotone_omega, sop_tight
from .generators import DiagonalParams, DiagonalRows, diagonal_instance, gen_diagonal, gen_two_effort_gap
from .metrics import GapReport, GapStatus, ambiguity_gap, first_best
from .probe import ProbeRecord, ProbeReport, probe_rows, random_two_effort_instance, two_effort_upper_bound_probe
from .unbounded import (
    ClaimCheck,
    UnboundedParams,
    claim_invariant_check,
    default_target_probs,
    gen_unbounded_gap,
    harmonic_bound_check,
    locate_u_bar,
    suggest_delta,
    verify_unbounded,
)

__all__ = [
    "FIXTURES",
    "ClaimCheck",
    "DiagonalParams",
    "DiagonalRows",
    "Fixture",
    "GapReport",
    "GapStatus",
    "ProbeRecord",
    "ProbeReport",
    "UnboundedParams",
    "ambiguity_gap",
    "claim_invariant_check",
    "default_target_probs",
    "diagonal_instance",
    "example1",
    "first_best",
    "gen_diagonal",
    "gen_fixture",
    "gen_two_effort_gap",
    "gen_unbounded_gap",
    "harmonic_bound_check",
    "locate_u_bar",
    "mlrp_b4",
    "monotone_omega",
    "probe_rows",
    "random_two_effort_instance",
    "sop_tight",
    "suggest_delta",
    "two_effort_upper_bound_probe",
    "verify_unbounded",
]
