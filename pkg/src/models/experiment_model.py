"""
Experiment configuration models
"""
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config import (
    ADAM_BETA1,
    ADAM_BETA2,
    ADAM_EPSILON,
    DEFAULT_BIDS_PER_EPOCH,
    DEFAULT_CUSTOMERS_PER_EPOCH,
    DEFAULT_EPOCHS,
    DEFAULT_GAMMA,
    DEFAULT_GROUPS,
    DEFAULT_SEED,
    DEFAULT_SEED_COUNT,
    EPSILON_DECAY,
    FAIRNESS_TRACKING_MODES,
    INIT_WEIGHT_SCALE,
    LEARNING_RATE,
    LR_METRIC_MODES,
    NEXT_STATE_GROUP_MODES,
    SUMMARY_WINDOW,
)
from src.models.encoding_model import ActionGrid, FairnessPartition
from src.models.market_model import GroupSpec
from src.models.reward_model import RewardParams


class AgentConfig(BaseModel):
    """
    Training-loop settings
    """
    epochs: int = Field(default=DEFAULT_EPOCHS, gt=0, description="Epochs E")
    bids_per_epoch: int = Field(default=DEFAULT_BIDS_PER_EPOCH, gt=0, description="Bids I per epoch")
    customers_per_epoch: int = Field(
        default=DEFAULT_CUSTOMERS_PER_EPOCH,
        gt=0,
        description="Roster size re-drawn every epoch"
    )
    epsilon_decay: float = Field(default=EPSILON_DECAY, gt=0, description="epsilon(t) = exp(-t/decay)")
    epsilon_pinned: Optional[float] = Field(
        default=None,
        ge=0,
        le=1,
        description="Constant epsilon overriding the schedule"
    )
    gamma: float = Field(default=DEFAULT_GAMMA, ge=0, lt=1, description="Discount factor")
    learning_rate: float = Field(default=LEARNING_RATE, gt=0)
    adam_beta1: float = Field(default=ADAM_BETA1, ge=0, lt=1)
    adam_beta2: float = Field(default=ADAM_BETA2, ge=0, lt=1)
    adam_epsilon: float = Field(default=ADAM_EPSILON, gt=0)
    init_scale: float = Field(default=INIT_WEIGHT_SCALE, ge=0, description="Uniform init half-width")
    fairness_tracking: str = Field(
        default="offered",
        description="Which prices enter the group averages: offered or accepted"
    )
    next_state_group: str = Field(
        default="next_draw",
        description="Group used in s': next_draw or same_customer"
    )
    lr_metric_mode: str = Field(
        default="cumulative",
        description="Visit counting for the convergence metric"
    )
    log_transitions: bool = Field(default=False, description="Stream one JSON record per bid")

    @field_validator('fairness_tracking')
    @classmethod
    def validate_tracking(cls, v):
        if v not in FAIRNESS_TRACKING_MODES:
            raise ValueError(f"Invalid fairness_tracking '{v}'. Must be one of: {FAIRNESS_TRACKING_MODES}")
        return v

    @field_validator('next_state_group')
    @classmethod
    def validate_next_state_group(cls, v):
        if v not in NEXT_STATE_GROUP_MODES:
            raise ValueError(f"Invalid next_state_group '{v}'. Must be one of: {NEXT_STATE_GROUP_MODES}")
        return v

    @field_validator('lr_metric_mode')
    @classmethod
    def validate_lr_metric_mode(cls, v):
        if v not in LR_METRIC_MODES:
            raise ValueError(f"Invalid lr_metric_mode '{v}'. Must be one of: {LR_METRIC_MODES}")
        return v


class ExperimentConfig(BaseModel):
    """
    Everything needed to reproduce one experiment across its seeds
    """
    name: str = Field(..., min_length=1, description="Experiment name, used as output sub-directory")
    description: str = Field(default="", description="Free-form note")
    agent: AgentConfig = Field(default_factory=AgentConfig)
    reward: RewardParams = Field(default_factory=RewardParams)
    grid: ActionGrid = Field(default_factory=ActionGrid)
    partition: FairnessPartition = Field(default_factory=FairnessPartition)
    groups: List[GroupSpec] = Field(
        default_factory=lambda: [GroupSpec(**g) for g in DEFAULT_GROUPS]
    )
    output_dir: Optional[str] = Field(default=None, description="Overrides <output root>/<name>")
    seeds: List[int] = Field(
        default_factory=lambda: list(range(DEFAULT_SEED, DEFAULT_SEED + DEFAULT_SEED_COUNT)),
        min_length=1
    )
    summary_window: int = Field(default=SUMMARY_WINDOW, gt=0)

    @field_validator('name')
    @classmethod
    def validate_name(cls, v):
        if not v.strip():
            raise ValueError("name must not be blank")
        return v

    @field_validator('seeds')
    @classmethod
    def validate_seeds(cls, v):
        if any(s < 0 for s in v):
            raise ValueError("seeds must be unsigned integers")
        if len(set(v)) != len(v):
            raise ValueError("seeds must be distinct")
        return v

    @model_validator(mode='after')
    def validate_groups(self):
        """Group ids must be 0..k-1 in order so they can index arrays"""
        if not self.groups:
            raise ValueError("at least one group is required")
        ids = [g.id for g in self.groups]
        if ids != list(range(len(ids))):
            raise ValueError(f"group ids must be 0..{len(ids) - 1} in order, got {ids}")
        return self

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    @property
    def state_dimension(self) -> int:
        return self.n_groups + self.partition.n_bins
