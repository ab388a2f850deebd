"""Rendering of command results as tables, JSON or CSV.

Every command produces a :class:`Report`: a name, the parameters it ran with
and a list of samples. JSON keeps vectors as lists; tables and CSV split them
into ``name_x``, ``name_y``, ``name_z`` columns in the order the command
emitted its fields.

Non-finite floats are written as ``null`` in JSON and as ``nan``, ``inf`` or
``-inf`` in tables and CSV.
"""

import csv
import io
import json
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import click
import numpy as np

from .options import OutputFormat


AXES = ("x", "y", "z")


@dataclass
class Report:
    name: str
    params: dict[str, Any] = field(default_factory=dict)
    samples: list[dict[str, Any]] = field(default_factory=list)


def _plain(value: Any) -> Any:
    """Convert numpy values and enums to JSON-friendly Python values."""
    if isinstance(value, np.ndarray):
        return [_plain(x) for x in value.tolist()]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (list, tuple)):
        return [_plain(x) for x in value]
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (int, float, bool, str)) or value is None:
        return value
    return str(value)


def _columns(sample: Mapping[str, Any]) -> dict[str, Any]:
    row = {}
    for key, value in sample.items():
        value = _plain(value)
        vector = isinstance(value, list) and len(value) == 3
        if vector and not isinstance(value[0], list):
            row.update({f"{key}_{axis}": x for axis, x in zip(AXES, value)})
        elif isinstance(value, list):
            flat = np.ravel(value).tolist()
            row.update({f"{key}_{i}": x for i, x in enumerate(flat)})
        else:
            row[key] = value
    return row


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return "nan" if math.isnan(value) else repr(value)
    return "" if value is None else str(value)


def _finite(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, list):
        return [_finite(x) for x in value]
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    return value


def to_json(report: Report) -> str:
    """``{name, params, samples}`` with samples in emission order."""
    document = {
        "name": report.name,
        "params": _plain(report.params),
        "samples": [_plain(sample) for sample in report.samples],
    }
    return json.dumps(_finite(document), indent=2, allow_nan=False)


def to_csv(report: Report) -> str:
    """One header row, then one row per sample; floats use ``repr``."""
    rows = [_columns(sample) for sample in report.samples]
    header = list(dict.fromkeys(key for row in rows for key in row))
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(key)) for key in header])
    return buffer.getvalue()


def to_table(report: Report) -> str:
    rows = [_columns(sample) for sample in report.samples]
    header = list(dict.fromkeys(key for row in rows for key in row))
    cells = [[_table_cell(row.get(key)) for key in header] for row in rows]
    widths = [max([len(h), *(len(r[i]) for r in cells)]) for i, h in enumerate(header)]

    title = report.name
    if report.params:
        title += " (" + ", ".join(f"{k}={v}" for k, v in report.params.items()) + ")"
    lines = [title, "  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _table_cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    return _cell(value)


RENDERERS = {
    OutputFormat.TABLE: to_table,
    OutputFormat.JSON: to_json,
    OutputFormat.CSV: to_csv,
}


def emit(report: Report, output_format: OutputFormat, out: Path | None = None) -> None:
    """Write the rendered report to ``out``, or to stdout."""
    text = RENDERERS[output_format](report)
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
