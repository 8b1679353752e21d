"""
Telemetry and result models
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.models.qnet_model import AdamState, QNet


class EpochStats(BaseModel):
    """
    Per-epoch aggregates
    """
    epoch: int = Field(..., ge=0, description="Epoch index starting at 0")
    epsilon: float = Field(..., ge=0, le=1, description="Exploration probability used")
    cum_bid: float = Field(..., ge=0, description="Sum of accepted bids (price units)")
    mean_fairness: float = Field(..., ge=0, le=1, description="Mean fairness over iterations")
    reject_count: int = Field(..., ge=0)
    reject_ratio: float = Field(..., ge=0, le=1)
    expected_revenue: float = Field(..., ge=0)
    group_means: List[float] = Field(..., description="Per-group bid means at epoch end")
    mean_reward_scaled: float = Field(..., description="Mean per-step reward, scaled to [0, 1]")
    lr_metric: float = Field(..., ge=0, description="Visit-count convergence metric")
    lr_step: float = Field(default=0.0, ge=0, le=1, description="Mean 1/C(pair) over the epoch's visits")
    bids: int = Field(..., ge=0, description="Bids simulated in the epoch")
    explored: int = Field(default=0, ge=0, description="Bids chosen at random")
    clamp_warnings: int = Field(default=0, ge=0, description="Fairness values clamped into [0, 1]")


class TransitionRecord(BaseModel):
    """
    One bid of the training loop
    """
    epoch: int
    iteration: int = Field(..., ge=1)
    group_id: int
    fairness_bin: int
    action: int
    bid: float
    accepted: bool
    price: float
    explored: bool
    fairness: float = Field(..., description="Fairness after the group-average update")
    state_fairness: float = Field(..., description="Fairness encoded in the state")
    reward: float
    target: float
    loss: float = Field(..., ge=0)


class ExperimentResult(BaseModel):
    """
    Per-epoch series plus the final network of one seed
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    seed: int
    stats: List[EpochStats] = Field(default_factory=list)
    net: QNet
    adam: AdamState
    transition_log: Optional[str] = Field(default=None, description="Path of the JSON-lines log")


class SeedArtifact(BaseModel):
    """
    Files produced for one seed
    """
    seed: int
    csv_path: str
    weights_path: Optional[str] = None
    transition_log: Optional[str] = None
    epochs: int = 0


class MetricSummary(BaseModel):
    mean: float
    std: float


class ExperimentSummary(BaseModel):
    """
    Final-window statistics aggregated across seeds
    """
    name: str
    seeds: List[int]
    window: int
    metrics: Dict[str, MetricSummary] = Field(
        default_factory=dict,
        description="cum_bid, mean_fairness, reject_ratio, expected_revenue, group means"
    )
    lr_trend: Optional[float] = Field(
        default=None,
        description="Mean Spearman rho of lr_step vs. epoch over the trailing window"
    )
    reward_curve_scaled: List[float] = Field(
        default_factory=list,
        description="Min-max scaled cumulative reward, averaged across seeds"
    )
