"""
Rendering of command results as JSON, CSV or an aligned text table.

Every JSON document carries the schema tag "tqft/1" and is written with sorted
keys, so identical results give byte-identical output.
"""
import csv
import dataclasses
import io
import json
import logging
import os
from fractions import Fraction
from typing import Any, Dict, List, Tuple

import numpy as np

from core.reports import CheckReport

logger = logging.getLogger('cli')

SCHEMA = "tqft/1"
FORMATS = ('json', 'csv', 'table')

# Floats are rounded to this many significant digits before emission
FLOAT_DIGITS = 15


def exact_value(value: Fraction) -> Dict[str, Any]:
    """An exact rational emitted as both a string and a decimal."""
    return {"exact": str(value), "decimal": _float(float(value))}


def _float(x: float) -> float:
    if x != x or x in (float('inf'), float('-inf')):
        return x
    return float(f"{x:.{FLOAT_DIGITS}g}")


def _complex(z: complex) -> List[float]:
    return [_float(z.real), _float(z.imag)]


def report_to_dict(report: CheckReport) -> Dict[str, Any]:
    return {
        "name": report.name,
        "passed": report.passed,
        "tol": report.tol,
        "max_defect": report.max_defect,
        "defects": report.defects,
        "details": report.details,
    }


def to_jsonable(obj: Any) -> Any:
    """Convert results to plain JSON values (Fractions keep their exact form)."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        return exact_value(obj)
    if isinstance(obj, (float, np.floating)):
        return _float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return _complex(complex(obj))
    if isinstance(obj, CheckReport):
        return to_jsonable(report_to_dict(obj))
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    return str(obj)


def dumps_json(command: str, payload: Dict[str, Any]) -> str:
    document = {"schema": SCHEMA, "command": command}
    document.update(to_jsonable(payload))
    return json.dumps(document, sort_keys=True, indent=2)


def _flatten(prefix: str, value: Any, rows: List[Tuple[str, str]]) -> None:
    if isinstance(value, dict):
        if set(value) == {"exact", "decimal"}:
            rows.append((prefix, value["exact"]))
            return
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else key, value[key], rows)
    elif isinstance(value, list) and value and all(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    elif isinstance(value, list):
        rows.append((prefix, " ".join(json.dumps(v) for v in value)))
    else:
        rows.append((prefix, json.dumps(value) if not isinstance(value, str) else value))


def flatten(command: str, payload: Dict[str, Any]) -> List[Tuple[str, str]]:
    rows: List[Tuple[str, str]] = [("schema", SCHEMA), ("command", command)]
    _flatten("", to_jsonable(payload), rows)
    return rows


def dumps_csv(command: str, payload: Dict[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["key", "value"])
    writer.writerows(flatten(command, payload))
    return buffer.getvalue()


def dumps_table(command: str, payload: Dict[str, Any]) -> str:
    rows = flatten(command, payload)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


def render(command: str, payload: Dict[str, Any], fmt: str = 'table') -> str:
    """
    Render a result payload.

    Args:
        command: Subcommand name, recorded in the output
        payload: Result dictionary
        fmt: 'json', 'csv' or 'table'

    Returns:
        The rendered text
    """
    if fmt == 'json':
        return dumps_json(command, payload) + "\n"
    if fmt == 'csv':
        return dumps_csv(command, payload)
    if fmt == 'table':
        return dumps_table(command, payload)
    raise ValueError(f"unknown output format '{fmt}'")


def save_result(command: str, payload: Dict[str, Any], filename: str) -> bool:
    """
    Write a JSON result document to a file.

    Returns:
        True if successful, False otherwise
    """
    try:
        os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
        with open(filename, 'w') as f:
            f.write(dumps_json(command, payload) + "\n")
        return True
    except OSError as e:
        logger.error(f"Error saving result to {filename}: {e}")
        return False
