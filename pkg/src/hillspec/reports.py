"""Structured pass/fail records for the cross-checks."""
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    check: str
    inputs: dict
    residual: float
    tolerance: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return bool(math.isfinite(self.residual) and self.residual <= self.tolerance)

    def to_dict(self):
        return {
            "check": self.check,
            "inputs": _plain(self.inputs),
            "residual": _finite_or_str(self.residual),
            "tolerance": self.tolerance,
            "passed": self.passed,
            "details": _plain(self.details),
        }


def _finite_or_str(x):
    x = float(x)
    return x if math.isfinite(x) else str(x)


def _plain(obj):
    """JSON-ready copy: complex -> [re, im], tuples -> lists, numpy scalars -> python."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "tolist"):
        return _plain(obj.tolist())
    if isinstance(obj, complex):
        return [_finite_or_str(obj.real), _finite_or_str(obj.imag)]
    if isinstance(obj, float):
        return _finite_or_str(obj)
    return obj
