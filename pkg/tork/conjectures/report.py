"""
`conjectures.report` defines the structured result of one inequality suite.
"""

from fractions import Fraction
from typing import Any,Literal

from pydantic import BaseModel,ConfigDict,computed_field

from ..exactla import format_rational


Status = Literal["pass", "fail", "na"]



class CheckRow(BaseModel):
    """One inequality `lhs >= rhs` (or `lhs == rhs` for equality checks)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    lhs: int
    rhs: int | Fraction
    status: Status

    @classmethod
    def at_least(cls, id:str, lhs:int, rhs:int|Fraction) -> "CheckRow":
        return cls(id=id, lhs=lhs, rhs=rhs, status="pass" if lhs >= rhs else "fail")

    @classmethod
    def equal(cls, id:str, lhs:int, rhs:int) -> "CheckRow":
        return cls(id=id, lhs=lhs, rhs=rhs, status="pass" if lhs == rhs else "fail")

    def to_json(self) -> dict:
        rhs = self.rhs
        if isinstance(rhs, Fraction):
            rhs = int(rhs) if rhs.denominator == 1 else format_rational(rhs)
        return {"id": self.id, "lhs": self.lhs, "rhs": rhs, "status": self.status}


class CheckReport(BaseModel):
    """
    Result of one suite on one Betti table.

    `applicable` is False when the hypothesis of the bound does not hold for the
    input; the rows are still recorded but the report is "na". A `proved` suite
    that fails on an applicable input points at a bug in the engine; a failing
    conjectural suite is a finding.
    """
    model_config = ConfigDict(frozen=True)

    suite: str
    proved: bool
    applicable: bool
    params: dict[str, Any] = {}
    rows: list[CheckRow] = []

    @computed_field
    @property
    def overall(self) -> Status:
        if not self.applicable:
            return "na"
        return "pass" if all(row.status == "pass" for row in self.rows) else "fail"

    def failing_rows(self) -> list[CheckRow]:
        return [row for row in self.rows if row.status == "fail"]

    def is_bug(self) -> bool:
        """A proved bound failed on an input satisfying its hypothesis."""
        return self.proved and self.overall == "fail"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "kind": "proved" if self.proved else "conjectural",
            "params": {**self.params, "applicable": self.applicable},
            "rows": [row.to_json() for row in self.rows],
            "overall": self.overall,
        }
