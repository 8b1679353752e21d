"""
Synthetic market data models: customer groups, rosters and bid outcomes
"""
import math
from typing import List, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class GroupSpec(BaseModel):
    """
    One customer segment and its logistic price-acceptance curve
    """
    id: int = Field(..., ge=0, description="Group index (0-based)")
    b: float = Field(..., description="Logistic intercept")
    w: float = Field(..., description="Logistic slope per price unit")
    share: float = Field(
        default=1.0,
        gt=0,
        description="Relative weight of the group in the customer roster"
    )

    @field_validator('b', 'w')
    @classmethod
    def validate_finite(cls, v):
        """Logistic parameters must be finite reals"""
        if not math.isfinite(v):
            raise ValueError(f"logistic parameter must be finite, got {v}")
        return v

    class Config:
        json_schema_extra = {
            "example": {"id": 0, "b": 18.229, "w": -2.369, "share": 1.0}
        }


class Population(BaseModel):
    """
    Customer roster active during one epoch
    """
    groups: List[GroupSpec] = Field(..., description="Ordered group specs")
    customers: List[Tuple[int, int]] = Field(
        ...,
        description="(customer id, group id) pairs"
    )
    seed: int = Field(default=0, ge=0, description="Seed the roster was drawn with")

    @model_validator(mode='after')
    def validate_roster(self):
        """Groups and customers non-empty, every customer in a known group"""
        if not self.groups:
            raise ValueError("population needs at least one group")
        if not self.customers:
            raise ValueError("population needs at least one customer")
        ids = {g.id for g in self.groups}
        if len(ids) != len(self.groups):
            raise ValueError("group ids must be unique")
        unknown = {gid for _, gid in self.customers if gid not in ids}
        if unknown:
            raise ValueError(f"customers reference unknown groups: {sorted(unknown)}")
        return self


class BidOutcome(BaseModel):
    """
    A customer's response to one bid
    """
    accepted: bool = Field(..., description="Whether the bid was accepted")
    price: float = Field(..., description="Offered bid if accepted, the penalty nu otherwise")
    group_id: int = Field(..., ge=0, description="Group of the responding customer")
