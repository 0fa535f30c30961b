"""Common verification-report record and its JSON shape."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    check_name: str
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tolerance: float
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {
            "check_name": self.check_name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
        if self.detail:
            d["detail"] = self.detail
        return d


def compare(check_name: str, lhs: float, rhs: float, tolerance: float,
            relative: bool = False, detail: str = "") -> VerificationReport:
    """Build a report for |lhs - rhs| against an absolute or relative tolerance."""
    abs_err = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_err = abs_err / scale if scale > 0 else 0.0
    err = rel_err if relative else abs_err
    ok = err <= tolerance and math.isfinite(abs_err)
    return VerificationReport(check_name, lhs, rhs, abs_err, rel_err, tolerance, ok, detail)


def bound_check(check_name: str, lhs: float, rhs: float, tolerance: float = 0.0,
                detail: str = "") -> VerificationReport:
    """Report for a one-sided inequality lhs <= rhs (with relative slack)."""
    abs_err = max(0.0, lhs - rhs)
    scale = max(abs(lhs), abs(rhs), 1e-300)
    rel_err = abs_err / scale
    ok = lhs <= rhs * (1.0 + tolerance) + tolerance * 1e-30
    return VerificationReport(check_name, lhs, rhs, abs_err, rel_err, tolerance, ok, detail)
