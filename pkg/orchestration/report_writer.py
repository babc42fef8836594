"""
Report Writer
Renders nested report dictionaries as key-value text with exact rationals, or as
a JSON mirror of the same content
"""

import json
import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Tuple

import numpy as np
import pandas as pd

from core.errors import PreconditionError

logger = logging.getLogger(__name__)

REPORT_TITLE = "quasirandom-report"


def format_fraction(value: Fraction) -> str:
    """Always num/den, so 0 is 0/1 and 1/2 stays 1/2."""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        raise PreconditionError(f"expected num/den, got {text!r}")
    return Fraction(int(num), int(den))


def normalize(value: Any) -> Any:
    """
    Convert a report value into plain JSON-compatible data.

    Fractions become 'num/den' strings, numpy scalars become Python numbers,
    DataFrames become lists of records, objects with as_dict() are expanded
    and NaN floats become None.
    """
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return None if math.isnan(value) else value
    if isinstance(value, str) or value is None:
        return value
    if isinstance(value, pd.DataFrame):
        return [normalize(row) for row in value.to_dict(orient="records")]
    if isinstance(value, np.ndarray):
        return [normalize(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(v) for v in value]
    if hasattr(value, "as_dict"):
        return normalize(value.as_dict())
    raise PreconditionError(f"cannot serialize {type(value).__name__} in a report")


def _flatten(prefix: str, value: Any) -> Iterator[Tuple[str, Any]]:
    if isinstance(value, dict):
        if not value:
            yield prefix, "{}"
        for key, inner in value.items():
            yield from _flatten(f"{prefix}.{key}" if prefix else key, inner)
    elif isinstance(value, list):
        if not value:
            yield prefix, "[]"
        for i, inner in enumerate(value):
            yield from _flatten(f"{prefix}.{i}", inner)
    else:
        yield prefix, value


def _scalar_text(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_text(report: Dict[str, Any]) -> str:
    """One `dotted.key = value` line per leaf, in insertion order."""
    data = normalize(report)
    lines = [f"# {REPORT_TITLE}"]
    for key, value in _flatten("", data):
        lines.append(f"{key} = {_scalar_text(value)}")
    return "\n".join(lines) + "\n"


def render_data(report: Dict[str, Any]) -> str:
    """The JSON mirror; key order follows the report, floats use shortest repr."""
    return json.dumps(normalize(report), indent=2, allow_nan=False) + "\n"


def render(report: Dict[str, Any], output_format: str) -> str:
    if output_format == "text":
        return render_text(report)
    if output_format == "data":
        return render_data(report)
    raise PreconditionError(f"unknown output format {output_format!r}")


def write_report(report: Dict[str, Any], output_format: str, out: Optional[str] = None) -> str:
    """
    Render a report and, when out is given, write it there.

    Returns:
        str: The rendered document
    """
    document = render(report, output_format)
    if out is not None:
        path = Path(out)
        path.write_text(document)
        logger.info(f"Report written to {path}")
    return document
