"""
命令行模块 - 子命令解析、分发与输出
"""
from .app import build_parser, main
from .base_command import EXIT_DOMAIN, EXIT_INPUT, EXIT_OK, BaseCommand, CommandContext, CommandOutcome

__all__ = [
    "build_parser",
    "main",
    "BaseCommand",
    "CommandContext",
    "CommandOutcome",
    "EXIT_OK",
    "EXIT_DOMAIN",
    "EXIT_INPUT",
]
