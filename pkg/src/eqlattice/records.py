"""Machine-readable output records: JSON lines (default) or CSV.

Integers are always written as integers.  ``read_records`` parses anything
``write_records`` produces, including CSV, where cells that look like
integers are converted back.
"""

from __future__ import annotations

import csv
import io
import json
from typing import IO, Any, Iterable

KINDS = ("plane", "triangle", "tetrahedron", "count", "family", "orbit", "probe",
         "classification", "error")


def record(kind: str, **payload: Any) -> dict[str, Any]:
    if kind not in KINDS:
        raise ValueError(f"unknown record kind {kind!r}")
    return {"kind": kind, **payload}


def _plain(obj: Any) -> Any:
    if isinstance(obj, tuple):
        return [_plain(v) for v in obj]
    if isinstance(obj, list):
        return [_plain(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    return obj


def write_records(records: Iterable[dict[str, Any]], out: IO[str], fmt: str = "json") -> int:
    """Write records; returns the number of error records written."""
    errors = 0
    if fmt == "json":
        for rec in records:
            errors += rec.get("kind") == "error"
            out.write(json.dumps(_plain(rec), separators=(",", ":")) + "\n")
            out.flush()
        return errors
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    rows = [{k: json.dumps(_plain(v)) if isinstance(v, (list, tuple, dict)) else v
             for k, v in rec.items()} for rec in records]
    fields: dict[str, None] = {}
    for row in rows:
        errors += row.get("kind") == "error"
        fields.update(dict.fromkeys(row))
    writer = csv.DictWriter(out, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    out.flush()
    return errors


def _cell(text: str) -> Any:
    if text == "":
        return None
    if text in ("True", "False"):
        return text == "True"
    try:
        return int(text)
    except ValueError:
        pass
    if text[:1] in "[{":
        try:
            return json.loads(text)
        except json.JSONDecodeError:
            return text
    try:
        return float(text)
    except ValueError:
        return text


def read_records(text: str, fmt: str | None = None) -> list[dict[str, Any]]:
    """Parse JSON lines, a JSON array, or CSV back into records."""
    stripped = text.lstrip()
    if fmt is None:
        fmt = "json" if stripped[:1] in ("{", "[", "") else "csv"
    if fmt == "json":
        if stripped.startswith("["):
            return json.loads(stripped)
        return [json.loads(line) for line in text.splitlines() if line.strip()]
    rows = csv.DictReader(io.StringIO(text))
    return [{k: _cell(v) for k, v in row.items()} for row in rows]


def golden(name: str) -> str:
    """Text of a bundled reference file (``table1.json``, ``table2.csv``, ``table3.json``)."""
    from importlib.resources import files

    return files("eqlattice").joinpath("data", name).read_text()
