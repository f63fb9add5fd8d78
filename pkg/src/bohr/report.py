"""JSON serialization shared by the CLI and the summary table."""

from __future__ import annotations

import json
import math

SCHEMA = "bohr-report/1"

# every record on the data stream carries at least these keys
RECORD_KEYS = ("id", "root", "closed_form", "paper_value", "deviation",
               "passed", "worst_margin", "notes")


def clean(obj):
    """Replace non-finite floats by None so the output is strict JSON."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return clean(obj.item())
    return obj


def record(**fields) -> dict:
    out = {k: fields.pop(k, None) for k in RECORD_KEYS}
    out.update(fields)
    if out["notes"] is None:
        out["notes"] = []
    return out


def dumps(records, **extra) -> str:
    doc = {"schema": SCHEMA, **extra, "records": list(records)}
    return json.dumps(clean(doc), indent=2, allow_nan=False) + "\n"
