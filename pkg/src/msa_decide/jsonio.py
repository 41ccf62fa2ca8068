"""Canonical JSON rendering.

All documents this package emits (knowledge bases, recommendation reports,
matrices, diffs, API bodies) must be byte-stable: same data, same bytes.
json.dumps cannot do this for floats (repr-based rendering leaks the shortest
round-trip form, e.g. 0.30000000000000004), so this module implements a small
writer with one number rule:

    numbers are rendered with up to six significant digits ("%.6g") and a
    ".0" suffix when the result would otherwise look like an integer.

Keys are written in insertion order; callers build mappings in canonical
key order. Documents end with a single newline.
"""

from __future__ import annotations

import json
import math


def format_number(value: float) -> str:
    """Render a float canonically: 1 -> "1.0", 0.5 -> "0.5", 1e7 -> "1e+07"."""
    if math.isnan(value) or math.isinf(value):
        raise ValueError("non-finite numbers cannot be serialized")
    if value == 0:
        value = 0.0  # collapse -0.0
    text = f"{value:.6g}"
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def _write(value, out: list[str], indent: int) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(format_number(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            if not isinstance(key, str):
                raise TypeError(f"object keys must be strings, got {type(key).__name__}")
            out.append(f"{inner}{json.dumps(key, ensure_ascii=False)}: ")
            _write(item, out, indent + 1)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(f"{pad}}}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            out.append(inner)
            _write(item, out, indent + 1)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(f"{pad}]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def canonical_dumps(value) -> str:
    """Serialize to canonical JSON text ending with a newline."""
    out: list[str] = []
    _write(value, out, 0)
    out.append("\n")
    return "".join(out)
