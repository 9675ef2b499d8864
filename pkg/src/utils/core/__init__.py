"""
Core - 核心基础设施模块

包含配置管理、日志与类型化配置视图。
"""

from .config import Config, config, get_config, reload_config
from .logger import LoggerManager, get_logger, reconfigure_logging

__all__ = [
    # Config
    "Config",
    "config",
    "get_config",
    "reload_config",
    # Logger
    "get_logger",
    "LoggerManager",
    "reconfigure_logging",
]
