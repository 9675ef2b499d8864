"""
基础文件读写操作

提供 JSON、JSONL 文件的读写功能，自动创建父目录。输出的 JSON 一律按键排序，
同一命令两次运行得到逐字节相同的文档。
"""
import json
from pathlib import Path
from typing import Any, Iterable

import orjson

from src.engine.errors import DocumentError


def read_text(path: Path | str) -> str:
    """
    Read a UTF-8 text file.

    Raises:
        DocumentError: the file is missing or unreadable
    """
    path = Path(path)
    try:
        return path.read_text(encoding='utf-8')
    except FileNotFoundError as e:
        raise DocumentError(f"file not found: {path}") from e
    except (OSError, UnicodeDecodeError) as e:
        raise DocumentError(f"cannot read {path}: {e}") from e


def parse_json_text(text: str, source: str = "<inline>") -> Any:
    """Parse a JSON document; malformed text raises DocumentError."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{source}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def read_json(path: Path | str) -> Any:
    """
    Read JSON file.

    Args:
        path: Path to JSON file

    Returns:
        Parsed document
    """
    return parse_json_text(read_text(path), str(path))


def dumps_json(obj: Any, indent: int = 2) -> str:
    """Serialize with sorted keys and a trailing newline."""
    return json.dumps(obj, indent=indent, sort_keys=True, ensure_ascii=False, default=str) + "\n"


def write_json(path: Path | str, obj: Any, indent: int = 2) -> None:
    """
    Write object to JSON file with automatic parent directory creation.

    Args:
        path: Path to output JSON file
        obj: Object to serialize
        indent: JSON indentation (default: 2)
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_json(obj, indent), encoding='utf-8')


def read_jsonl(path: Path | str) -> list[dict]:
    """
    Read JSONL file and return list of dicts.

    Args:
        path: Path to JSONL file

    Returns:
        List of parsed dicts (empty list if file doesn't exist)
    """
    path = Path(path)
    if not path.exists():
        return []

    results = []
    with open(path, 'rb') as f:
        for line_num, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                results.append(orjson.loads(line))
            except orjson.JSONDecodeError as e:
                raise DocumentError(f"{path}: invalid JSON on line {line_num}: {e}") from e
    return results


def write_jsonl(path: Path | str, rows: Iterable[dict]) -> int:
    """
    Write iterable of dicts to JSONL file with automatic parent directory creation.

    Args:
        path: Path to output JSONL file
        rows: Iterable of dicts to write

    Returns:
        Number of rows written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    count = 0
    with open(path, 'wb') as f:
        for row in rows:
            f.write(orjson.dumps(row, option=orjson.OPT_SORT_KEYS))
            f.write(b'\n')
            count += 1
    return count


def append_jsonl(path: Path | str, row: dict) -> None:
    """
    Append a single dict to JSONL file with automatic parent directory creation.

    Args:
        path: Path to JSONL file
        row: Dict to append
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'ab') as f:
        f.write(orjson.dumps(row, option=orjson.OPT_SORT_KEYS))
        f.write(b'\n')
