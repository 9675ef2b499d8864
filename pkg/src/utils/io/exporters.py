"""
Export utilities: render result documents as JSON, CSV or a plain-text table.
"""
import json
from pathlib import Path
from typing import Any

import pandas as pd

from .file_ops import dumps_json, write_jsonl

FORMATS = ("json", "csv", "pretty")


def flatten(document: dict, prefix: str = "") -> dict[str, Any]:
    """Nested dicts become dotted keys; lists are kept as compact JSON text."""
    flat: dict[str, Any] = {}
    for key in sorted(document):
        value = document[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value, sort_keys=True, separators=(",", ":"))
        else:
            flat[name] = value
    return flat


def to_csv(document: dict, table: list[dict] | None = None) -> str:
    """
    CSV of the per-action table when there is one, otherwise a single row
    holding the flattened document.
    """
    rows = [flatten(row) for row in table] if table else [flatten(document)]
    return pd.DataFrame(rows).to_csv(index=False, lineterminator="\n")


def to_pretty(document: dict, table: list[dict] | None = None) -> str:
    flat = flatten(document)
    width = max((len(k) for k in flat), default=0)
    lines = [f"{k.ljust(width)}  {'' if v is None else v}" for k, v in flat.items()]
    if table:
        frame = pd.DataFrame([flatten(row) for row in table]).fillna("")
        lines += ["", frame.to_string(index=False)]
    return "\n".join(lines) + "\n"


def render(document: dict, fmt: str = "json", table: list[dict] | None = None) -> str:
    """
    Render a result document.

    Args:
        document: Result document (already made of plain JSON values)
        fmt: One of json, csv, pretty
        table: Optional per-action rows for csv/pretty output

    Returns:
        Rendered text ending with a newline
    """
    if fmt == "json":
        return dumps_json(document)
    if fmt == "csv":
        return to_csv(document, table)
    if fmt == "pretty":
        return to_pretty(document, table)
    raise ValueError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")


def export_records_jsonl(records: list[dict], out_path: Path | str) -> int:
    """Write per-trial records, one JSON object per line."""
    return write_jsonl(out_path, records)
