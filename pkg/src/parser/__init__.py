"""
解析器模块 - 输入文档解析器的抽象和具体实现
"""

from .base import BaseParser, format_validation_error
from .class_spec_parser import ClassSpecParser
from .instance_parser import InstanceParser, emit_instance, parse_instance
from .tau_parser import TauParser

__all__ = [
    "BaseParser",
    "ClassSpecParser",
    "InstanceParser",
    "TauParser",
    "emit_instance",
    "format_validation_error",
    "parse_instance",
]
