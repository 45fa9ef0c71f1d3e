"""The BoundCheck record: one statement evaluated on one graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

THEOREM_IDS = (
    "T1.1-consistency", "T1.2", "T1.3-oracle", "T1.4", "T1.6", "C1.7", "T1.8",
    "L2.1", "L2.2", "T2.3", "P2.4", "L2.5", "T2.6", "T3.1", "T3.2", "Claims3",
    "P3.3", "P4.1", "Conj4", "prior-CK", "prior-Huang",
)


@dataclass
class BoundCheck:
    """Every check is normalized to ``lhs <= rhs`` (relation ``"<="``) or
    ``lhs == rhs`` (relation ``"=="``), so ``slack = rhs - lhs`` passes iff
    it is ``>= 0`` (resp. ``== 0``).  Rational statements are multiplied
    through by ``scale`` to stay in integers.  A check whose hypothesis
    fails is not applicable and passes vacuously."""

    theorem_id: str
    applicable: bool
    lhs: int | None = None
    rhs: int | None = None
    relation: str = "<="
    scale: int = 1
    note: str = ""
    witness_data: Any = None
    slack: int | None = field(init=False, default=None)
    passed: bool = field(init=False, default=True)

    def __post_init__(self):
        if self.applicable:
            self.slack = self.rhs - self.lhs
            self.passed = self.slack >= 0 if self.relation == "<=" else self.slack == 0
        else:
            self.passed = True

    @property
    def tight(self) -> bool:
        return self.applicable and self.slack == 0

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "applicable": self.applicable,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "scale": self.scale,
            "slack": self.slack,
            "pass": self.passed,
            "note": self.note,
            "witness_data": self.witness_data,
        }


def leq(tid, lhs, rhs, **kw) -> BoundCheck:
    return BoundCheck(tid, True, int(lhs), int(rhs), "<=", **kw)


def eq(tid, lhs, rhs, **kw) -> BoundCheck:
    return BoundCheck(tid, True, int(lhs), int(rhs), "==", **kw)


def not_applicable(tid, note="") -> BoundCheck:
    return BoundCheck(tid, False, note=note)
