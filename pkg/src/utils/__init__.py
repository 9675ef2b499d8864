"""
工具模块 - 配置管理、日志与文件输入输出

包结构：
- core/: 核心基础设施 (config, logger, config_helpers)
- io/: 输入输出操作 (file_ops, exporters)

使用方式:
    from src.utils.core.config import Config
    from src.utils.core.config_helpers import parse_probe_settings
    from src.utils.io.file_ops import read_json, write_jsonl
    from src.utils.io.exporters import render
"""

__all__ = [
    "core",
    "io",
]
