"""Check results and the JSON report envelope."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"


@dataclass
class Check:
    name: str
    passed: bool | None  # None means inconclusive
    detail: dict = field(default_factory=dict)
    tol: float | None = None

    @property
    def status(self) -> str:
        if self.passed is None:
            return INCONCLUSIVE
        return PASS if self.passed else FAIL

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "witness": self.detail, "tol": self.tol}


def exit_code(checks) -> int:
    statuses = {c.status for c in checks}
    if FAIL in statuses:
        return 1
    if INCONCLUSIVE in statuses:
        return 2
    return 0


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=_default, ensure_ascii=False) + "\n"
