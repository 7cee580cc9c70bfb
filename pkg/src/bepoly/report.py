"""Machine-readable outcome of one identity check."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exact import Poly, format_rat, poly_to_text


def _fmt(v) -> str:
    if isinstance(v, (int, Fraction)):
        return format_rat(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    params: dict[str, str]
    lhs: str
    rhs: str
    residual: str
    passed: bool
    extras: dict[str, str] = field(default_factory=dict)
    note: str | None = None

    def to_dict(self) -> dict:
        d = {
            "identity_id": self.identity_id,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "pass": self.passed,
        }
        if self.extras:
            d["extras"] = self.extras
        if self.note:
            d["note"] = self.note
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def exact_report(
    identity_id: str,
    params: Mapping[str, object],
    lhs: Fraction,
    rhs: Fraction,
    extras: Mapping[str, Fraction] | None = None,
    note: str | None = None,
) -> VerificationReport:
    """Pass iff ``lhs == rhs`` and every extra value equals ``rhs`` too."""
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    extras = dict(extras or {})
    ok = lhs == rhs and all(Fraction(v) == rhs for v in extras.values())
    return VerificationReport(
        identity_id,
        {k: _fmt(v) for k, v in params.items()},
        format_rat(lhs),
        format_rat(rhs),
        format_rat(lhs - rhs),
        ok,
        {k: _fmt(v) for k, v in extras.items()},
        note,
    )


def float_report(
    identity_id: str,
    params: Mapping[str, object],
    lhs: float,
    rhs: float,
    tol: float,
    note: str | None = None,
) -> VerificationReport:
    residual = lhs - rhs
    return VerificationReport(
        identity_id,
        {k: _fmt(v) for k, v in params.items()},
        repr(float(lhs)),
        repr(float(rhs)),
        repr(float(residual)),
        abs(residual) < tol,
        {},
        note,
    )


def poly_report(identity_id: str, params: Mapping[str, object], lhs: Poly, rhs: Poly) -> VerificationReport:
    """Exact comparison of two polynomials in canonical form."""
    return VerificationReport(
        identity_id,
        {k: _fmt(v) for k, v in params.items()},
        poly_to_text(lhs),
        poly_to_text(rhs),
        poly_to_text(lhs - rhs),
        lhs == rhs,
    )
