"""
Pydantic schemas for formula-vs-oracle verification
"""
from typing import Literal

from pydantic import BaseModel, Field, computed_field

OracleKind = Literal["dags", "naive", "extract"]


class VerifyRecord(BaseModel):
    """One formula value checked against one oracle"""

    n: int = Field(..., ge=1)
    quantity: Literal["bn", "mb"]
    formula_value: int
    oracle_value: int
    oracle_kind: OracleKind
    target: int = 0
    wall_time_seconds: float = Field(..., ge=0)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matched(self) -> bool:
        return self.formula_value == self.oracle_value

    def render(self) -> str:
        """Deterministic PASS/FAIL line (wall time is logged, not printed)"""
        status = "PASS" if self.matched else "FAIL"
        return (
            f"{status} n={self.n} {self.quantity} oracle={self.oracle_kind} "
            f"formula={self.formula_value} oracle_value={self.oracle_value}"
        )


class VerifyReport(BaseModel):
    """Verification records in ascending n"""

    records: list[VerifyRecord] = []

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(record.matched for record in self.records)

    @property
    def mismatches(self) -> list[VerifyRecord]:
        return [record for record in self.records if not record.matched]
