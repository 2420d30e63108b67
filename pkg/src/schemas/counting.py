"""
Pydantic schemas for count tables and benchmark rows
"""
from pydantic import BaseModel, ConfigDict, model_validator

from ..services.counting import ExactRatio


class CountRow(BaseModel):
    """One row of the BN/MB comparison table"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    bn: int
    mb: int
    ratio: ExactRatio
    bn_text: str
    mb_text: str
    ratio_text: str

    @model_validator(mode="after")
    def check_ratio_matches_counts(self) -> "CountRow":
        """The ratio is BN(n) / MB(n) unreduced"""
        if self.ratio.numerator != self.bn or self.ratio.denominator != self.mb:
            raise ValueError(
                f"ratio {self.ratio.numerator}/{self.ratio.denominator} "
                f"does not match bn={self.bn}, mb={self.mb}"
            )
        return self


class BenchRecord(BaseModel):
    """Term counts and timing for one n"""

    n: int
    bn_terms: int
    mb_terms: int
    bn_fill_terms: int
    mb_fill_terms: int
    big_multiplications: int
    wall_time_seconds: float
