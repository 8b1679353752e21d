"""
Data models package
"""
from src.models.market_model import GroupSpec, Population, BidOutcome
from src.models.fairness_model import GroupAverages
from src.models.encoding_model import ActionGrid, FairnessPartition, State
from src.models.reward_model import RewardParams
from src.models.qnet_model import QNet, AdamState
from src.models.experiment_model import AgentConfig, ExperimentConfig
from src.models.stats_model import (
    EpochStats,
    TransitionRecord,
    ExperimentResult,
    ExperimentSummary,
    MetricSummary,
    SeedArtifact,
)
from src.models.state_model import RunnerState, SeedTask

__all__ = [
    "GroupSpec",
    "Population",
    "BidOutcome",
    "GroupAverages",
    "ActionGrid",
    "FairnessPartition",
    "State",
    "RewardParams",
    "QNet",
    "AdamState",
    "AgentConfig",
    "ExperimentConfig",
    "EpochStats",
    "TransitionRecord",
    "ExperimentResult",
    "ExperimentSummary",
    "MetricSummary",
    "SeedArtifact",
    "RunnerState",
    "SeedTask",
]
