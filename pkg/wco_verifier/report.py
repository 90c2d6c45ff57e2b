"""
Deterministic JSON and CSV rendering.

Floats go out with at most 17 significant digits. JSON uses the shortest
repr that reads back to the same double; CSV uses ``.17g``. Complex numbers
become ``[re, im]`` in JSON and non-finite values become ``null``.
"""

import csv
import io
import json
import math
from enum import Enum
from typing import Any, Iterable, List, Sequence

import numpy as np

from hardy.wco.models import OutputFormat

SCHEMA = "wco-report/1"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else None
    if isinstance(obj, (complex, np.complexfloating)):
        return [to_jsonable(obj.real), to_jsonable(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps_json(payload: dict) -> str:
    body = {"schema": SCHEMA, **payload}
    return json.dumps(to_jsonable(body), indent=2, sort_keys=True, ensure_ascii=False, allow_nan=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def dumps_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]], comments: List[str] = ()) -> str:
    """Comment lines prefixed with '#', then a header row, LF line endings."""
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render(result: dict) -> str:
    """Text for a successful tool result in the format it declares."""
    if OutputFormat(result["format"]) is OutputFormat.CSV:
        return dumps_csv(result["columns"], result["rows"], result["comments"])
    return dumps_json(result["report"])
