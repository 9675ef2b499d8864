"""
I/O - 输入输出操作模块

包含文件读写与结果导出功能。
"""

from .exporters import FORMATS, export_records_jsonl, flatten, render, to_csv, to_pretty
from .file_ops import (
    append_jsonl,
    dumps_json,
    parse_json_text,
    read_json,
    read_jsonl,
    read_text,
    write_json,
    write_jsonl,
)

__all__ = [
    # File operations
    "append_jsonl",
    "dumps_json",
    "parse_json_text",
    "read_json",
    "read_jsonl",
    "read_text",
    "write_json",
    "write_jsonl",
    # Exporters
    "FORMATS",
    "export_records_jsonl",
    "flatten",
    "render",
    "to_csv",
    "to_pretty",
]
