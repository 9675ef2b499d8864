"""
Configuration Helpers - 统一配置解析工具

从 Config 对象解析求解器、探针与无界构造的类型化配置视图。
"""
from dataclasses import dataclass, field

import numpy as np

from src.utils.core.logger import get_logger

logger = get_logger(__name__)


@dataclass
class SolverSettings:
    """求解器与输出配置"""
    threads: int = 1
    output_format: str = "json"
    decimal_digits: int = 12


@dataclass
class ProbeSettings:
    """两档努力随机探针配置"""
    trials: int = 100
    seed: int = 20240611
    max_actions: int = 6
    max_outcomes: int = 6
    max_denominator: int = 8


@dataclass
class UnboundedSettings:
    """无界差距构造配置"""
    bisection_tol: float = 1e-12
    max_retries: int = 8
    nudge: float = 1e-6
    max_denominator: int = 1000000
    default_x: int = 50


@dataclass
class ManipulabilitySettings:
    """可操纵性检查配置"""
    default_grid: list[str] = field(default_factory=lambda: ["0", "1/2", "1", "2", "3"])


def parse_solver_settings(config) -> SolverSettings:
    """解析求解器配置

    Args:
        config: Config 对象

    Returns:
        SolverSettings: 解析后的配置
    """
    threads = int(config.get('solver.threads', 1) or 1)
    if threads < 1:
        logger.warning("solver.threads=%s is below 1; using 1", threads)
        threads = 1
    return SolverSettings(
        threads=threads,
        output_format=str(config.get('output.format', 'json')),
        decimal_digits=int(config.get('output.decimal_digits', 12)),
    )


def parse_probe_settings(config) -> ProbeSettings:
    """解析探针配置"""
    section = config.get_section('probe') or {}
    return ProbeSettings(
        trials=int(section.get('trials', 100)),
        seed=int(section.get('seed', 20240611)),
        max_actions=int(section.get('max_actions', 6)),
        max_outcomes=int(section.get('max_outcomes', 6)),
        max_denominator=int(section.get('max_denominator', 8)),
    )


def parse_unbounded_settings(config) -> UnboundedSettings:
    """解析无界构造配置"""
    section = config.get_section('unbounded') or {}
    return UnboundedSettings(
        bisection_tol=float(section.get('bisection_tol', 1e-12)),
        max_retries=int(section.get('max_retries', 8)),
        nudge=float(section.get('nudge', 1e-6)),
        max_denominator=int(section.get('max_denominator', 1000000)),
        default_x=int(section.get('default_x', 50)),
    )


def parse_manipulability_settings(config) -> ManipulabilitySettings:
    """解析可操纵性配置"""
    grid = config.get('manipulability.default_grid') or ["0", "1/2", "1", "2", "3"]
    return ManipulabilitySettings(default_grid=[str(x) for x in grid])


def spawn_streams(seed: int, count: int) -> list[np.random.Generator]:
    """为每个独立试验派生互不相关的随机流"""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]
