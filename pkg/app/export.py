"""
JSON export of triangulations and filling results, and atomic file writes.
"""

import json
from dataclasses import is_dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict

from farey import PositiveCF, Slope
from filling import FillingPlan, FillingResult, KnotType
from triangulation import Triangulation, iso_signature, triangulation_to_dict


class FillingEncoder(json.JSONEncoder):
    """Slopes as "p/q", enums by value, tuples and sets as lists."""

    def default(self, obj):
        if isinstance(obj, Slope):
            return str(obj)
        if isinstance(obj, PositiveCF):
            return list(obj.coefficients)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Triangulation):
            return triangulation_to_dict(obj)
        if isinstance(obj, (set, frozenset)):
            return sorted(obj, key=str)
        if isinstance(obj, KnotType):
            return {'kind': obj.kind.value, 'k': obj.k, 'label': str(obj)}
        if is_dataclass(obj) and not isinstance(obj, type):
            return {name: getattr(obj, name) for name in obj.__dataclass_fields__}
        return super().default(obj)


def plan_to_dict(plan: FillingPlan) -> Dict[str, Any]:
    return {
        'seed': plan.seed.value,
        'slopes': [str(plan.slope1), str(plan.slope2)],
        'counts': list(plan.counts),
        'total': plan.total,
        'swapped': plan.swapped,
        'knot': str(plan.knot) if plan.knot is not None else None,
    }


def result_to_dict(result: FillingResult) -> Dict[str, Any]:
    return {
        'plan': plan_to_dict(result.plan),
        'counts': list(result.counts),
        'total': result.total,
        'killed': [str(s) for s in result.killed],
        'iso_signature': iso_signature(result.triangulation),
        'triangulation': triangulation_to_dict(result.triangulation),
    }


def to_json(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    if isinstance(obj, FillingResult):
        obj = result_to_dict(obj)
    elif isinstance(obj, FillingPlan):
        obj = plan_to_dict(obj)
    return json.dumps(obj, cls=FillingEncoder, indent=2, sort_keys=True) + '\n'


def write_atomic(path, text: str) -> Path:
    """
    Write to <path>.tmp and rename it over the target, so readers never see
    a partial file. The temp file is removed if anything fails.
    """
    path = Path(path)
    temp_file = path.with_name(path.name + '.tmp')
    try:
        with open(temp_file, 'w') as f:
            f.write(text)
        temp_file.replace(path)
    except Exception:
        if temp_file.exists():
            temp_file.unlink()
        raise
    return path
