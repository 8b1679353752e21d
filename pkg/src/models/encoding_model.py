"""
Discretization models: action grid, fairness partition and encoded states
"""
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config import (
    DEFAULT_FAIRNESS_MESH,
    DEFAULT_MAX_PRICE,
    DEFAULT_MIN_PRICE,
    DEFAULT_PRICE_MESH,
    TOP_BIN_LAYOUTS,
)

_MESH_TOLERANCE = 1e-9


class ActionGrid(BaseModel):
    """
    Evenly spaced bid prices min, min+q, ..., max
    """
    model_config = ConfigDict(frozen=True)

    min_price: float = Field(default=DEFAULT_MIN_PRICE, description="Lowest bid")
    max_price: float = Field(default=DEFAULT_MAX_PRICE, description="Highest bid")
    mesh: float = Field(default=DEFAULT_PRICE_MESH, gt=0, description="Grid step q")

    @model_validator(mode='after')
    def validate_span(self):
        """max > min and the span must be a whole number of steps"""
        if not self.max_price > self.min_price:
            raise ValueError("max_price must exceed min_price")
        steps = (self.max_price - self.min_price) / self.mesh
        if abs(steps - round(steps)) > 1e-6:
            raise ValueError(
                f"span {self.max_price - self.min_price} is not a multiple of mesh {self.mesh}"
            )
        return self

    @property
    def size(self) -> int:
        """Number of actions m"""
        return int(round((self.max_price - self.min_price) / self.mesh)) + 1

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.min_price, self.max_price, self.size)


class FairnessPartition(BaseModel):
    """
    Partition of [0, 1] with mesh p used to one-hot encode fairness.

    Bins are half-open [k*p, (k+1)*p). With the "separate" layout there are
    1/p + 1 bins and the last one holds exactly 1.0; with "merged" there are
    1/p bins and the last one is closed at 1.
    """
    model_config = ConfigDict(frozen=True)

    mesh: float = Field(default=DEFAULT_FAIRNESS_MESH, gt=0, le=1, description="Bin width p")
    top_bin: str = Field(default="separate", description="separate or merged")

    @field_validator('mesh')
    @classmethod
    def validate_mesh(cls, v):
        inverse = 1.0 / v
        if abs(inverse - round(inverse)) > 1e-6:
            raise ValueError(f"1/mesh must be an integer, got {inverse}")
        return v

    @field_validator('top_bin')
    @classmethod
    def validate_top_bin(cls, v):
        if v not in TOP_BIN_LAYOUTS:
            raise ValueError(f"Invalid top_bin '{v}'. Must be one of: {TOP_BIN_LAYOUTS}")
        return v

    @property
    def intervals(self) -> int:
        """Number of mesh-wide intervals, 1/p"""
        return int(round(1.0 / self.mesh))

    @property
    def n_bins(self) -> int:
        return self.intervals + 1 if self.top_bin == "separate" else self.intervals

    def bin_index(self, value: float) -> int:
        k = int(math.floor(value * self.intervals + _MESH_TOLERANCE))
        return min(max(k, 0), self.n_bins - 1)


class State(BaseModel):
    """
    Two-hot state: customer-group one-hot followed by fairness-bin one-hot
    """
    model_config = ConfigDict(frozen=True)

    group_id: int = Field(..., ge=0)
    fairness_bin: int = Field(..., ge=0)
    n_groups: int = Field(..., gt=0)
    n_bins: int = Field(..., gt=0)
    clamped: bool = Field(default=False, description="Fairness was outside [0, 1]")

    @model_validator(mode='after')
    def validate_indices(self):
        if self.group_id >= self.n_groups:
            raise ValueError(f"group_id {self.group_id} out of range for {self.n_groups} groups")
        if self.fairness_bin >= self.n_bins:
            raise ValueError(f"fairness_bin {self.fairness_bin} out of range for {self.n_bins} bins")
        return self

    @property
    def dimension(self) -> int:
        """n = |G| + number of fairness bins"""
        return self.n_groups + self.n_bins

    @property
    def active(self) -> tuple:
        """Indices of the two nonzero entries"""
        return self.group_id, self.n_groups + self.fairness_bin

    def vector(self) -> np.ndarray:
        x = np.zeros(self.dimension)
        x[list(self.active)] = 1.0
        return x
