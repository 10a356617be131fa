"""Deterministic report serialization (JSON and CSV).

Reports must be byte-identical across reruns with the same seed, so floats
are always emitted with 17 significant digits (lossless for doubles), JSON
keys are sorted, CSV uses '.' decimals and a versioned header row, and no
timestamps or environment data enter the output.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

SCHEMA = "gaussbalance-report/1"


def _scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return '"nan"'
        if math.isinf(value):
            return '"inf"' if value > 0 else '"-inf"'
        return format(value, ".17g")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=True)
    raise TypeError(f"unsupported report value {value!r}")


def dumps(obj) -> str:
    """JSON text with sorted keys and 17-significant-digit floats."""
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}:{dumps(v)}" for k, v in sorted(obj.items()))
        return "{" + ",".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    return _scalar(obj)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, ".17g")
    if isinstance(value, int):
        return str(value)
    text = str(value)
    if any(c in text for c in ',"\n'):
        text = '"' + text.replace('"', '""') + '"'
    return text


def render_csv_table(table: dict) -> str:
    lines = [f"# schema={SCHEMA} table={table['name']}"]
    lines.append(",".join(table["columns"]))
    for row in table["rows"]:
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def render_summary_csv(report: dict) -> str:
    lines = [f"# schema={SCHEMA} command={report['command']} seed={report['seed']}"]
    lines.append("check,kind,passed")
    for check in report["checks"]:
        lines.append(
            ",".join([_csv_cell(check["name"]), check["kind"], _csv_cell(check["passed"])])
        )
    return "\n".join(lines) + "\n"


def write_report(report: dict, out: Path | None, fmt: str) -> list[Path]:
    """Write the report; JSON as one file, CSV as summary plus one file per
    table. Returns the paths written (empty when out is None)."""
    if out is None:
        return []
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt == "json":
        out.write_text(dumps(report) + "\n")
        written.append(out)
    elif fmt == "csv":
        out.write_text(render_summary_csv(report))
        written.append(out)
        for table in report["tables"]:
            path = out.with_name(f"{out.stem}_{table['name']}.csv")
            path.write_text(render_csv_table(table))
            written.append(path)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return written
