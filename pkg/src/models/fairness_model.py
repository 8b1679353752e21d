"""
Running per-group price averages
"""
from typing import List

from pydantic import BaseModel, Field, model_validator


class GroupAverages(BaseModel):
    """
    Per-group running mean of allocated prices. A group with no bids has mean 0.
    """
    means: List[float] = Field(..., description="Running mean price per group")
    counts: List[int] = Field(..., description="Number of prices folded into each mean")

    @model_validator(mode='after')
    def validate_lengths(self):
        if len(self.means) != len(self.counts):
            raise ValueError("means and counts must have the same length")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")
        return self

    @classmethod
    def empty(cls, n_groups: int) -> "GroupAverages":
        return cls(means=[0.0] * n_groups, counts=[0] * n_groups)
