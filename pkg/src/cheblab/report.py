"""Deterministic report serialization.

JSON output is byte-identical for identical inputs: keys keep insertion
order, floats are fixed at 12 significant digits, exact rationals are
rendered as "p/q" strings, and cyclotomic values use their integer
coefficient form.
"""

from __future__ import annotations

import io
import json
from dataclasses import is_dataclass
from fractions import Fraction

from .cyclotomic import Cyclo

__all__ = ["canonical", "json_dumps", "csv_text"]


def canonical(obj):
    """Normalize a report object tree for stable serialization."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Cyclo):
        return canonical(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [canonical(v) for v in sorted(obj)]
    if is_dataclass(obj) and hasattr(obj, "to_json"):
        return canonical(obj.to_json())
    if hasattr(obj, "to_json"):
        return canonical(obj.to_json())
    return obj


def json_dumps(obj) -> str:
    return json.dumps(canonical(obj), indent=2)


def csv_text(rows: list[dict]) -> str:
    """CSV with the union of keys in first-seen order and 12-digit floats."""
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)

    def fmt(v):
        v = canonical(v)
        if isinstance(v, float):
            return f"{v:.12g}"
        if v is None:
            return ""
        if isinstance(v, (list, dict)):
            return json.dumps(v)
        return str(v)

    out = io.StringIO()
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(fmt(row.get(c)) for c in columns) + "\n")
    return out.getvalue()
