"""Structured outcome of one identity check."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class Status(enum.Enum):
    EXACT_PASS = "ExactPass"
    NUMERIC_PASS = "NumericPass"
    DISCREPANCY = "Discrepancy"
    SKIPPED = "Skipped"


def fmt_value(value) -> str:
    """Exact rationals as ``num/den``, integers plainly, floats by ``repr``."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    status: Status
    lhs: str = ""
    rhs: str = ""
    error: float | None = None
    notes: str = ""
    # discrepancy traced to a known misstatement in the source formula
    paper_flag: bool = False

    def __post_init__(self):
        if self.status is Status.DISCREPANCY and not self.notes:
            raise ValueError("a Discrepancy report must carry a note")

    @property
    def passed(self) -> bool:
        return self.status in (Status.EXACT_PASS, Status.NUMERIC_PASS)

    @classmethod
    def exact(cls, identity: str, lhs, rhs, notes: str = "", mismatch_note: str = "",
              paper_flag: bool = False) -> VerifyReport:
        """Exact comparison; equal values pass, anything else is a Discrepancy."""
        if lhs == rhs:
            return cls(identity, Status.EXACT_PASS, fmt_value(lhs), fmt_value(rhs), notes=notes)
        return cls(identity, Status.DISCREPANCY, fmt_value(lhs), fmt_value(rhs),
                   notes=mismatch_note or notes or "exact values differ", paper_flag=paper_flag)

    @classmethod
    def numeric(cls, identity: str, lhs: float, rhs: float, tol: float, notes: str = "") -> VerifyReport:
        err = abs(lhs - rhs)
        if err <= tol:
            return cls(identity, Status.NUMERIC_PASS, fmt_value(lhs), fmt_value(rhs), err, notes)
        note = f"|lhs - rhs| = {err:.3e} exceeds {tol:.1e}"
        return cls(identity, Status.DISCREPANCY, fmt_value(lhs), fmt_value(rhs), err,
                   f"{note}; {notes}" if notes else note)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "status": self.status.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "error": self.error,
            "notes": self.notes,
            "paper_flag": self.paper_flag,
        }
