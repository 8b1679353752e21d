"""
State model for the LangGraph experiment workflow
This is the central data structure that flows through all runner nodes
"""
from operator import add
from typing import Annotated, Any, Dict, List, Optional, TypedDict

from src.models.experiment_model import ExperimentConfig
from src.models.stats_model import ExperimentSummary, SeedArtifact


def _max_reducer(a: int, b: int) -> int:
    # builtin max has no inspectable signature on Python 3.10; LangGraph needs one
    return max(a, b)


class RunnerState(TypedDict):
    """
    Master state object that flows through the runner workflow
    Each node reads from and writes to specific keys
    """

    # ==================== INPUT SECTION ====================
    config_source: Optional[str]  # Preset name or path to a JSON config
    overrides: Dict[str, Any]  # CLI flag overrides
    mode: str  # "train" or "evaluate"
    weights_path: Optional[str]  # Saved weights for evaluate mode
    output_root: Optional[str]  # Parent of the per-experiment output directory

    # ==================== RESOLVED CONFIG ====================
    # Populated by Config Loader
    config: Optional[ExperimentConfig]
    output_dir: Optional[str]

    # ==================== RESULTS ====================
    # Populated by Seed Runner (one task per seed, append-only)
    seed_results: Annotated[List[SeedArtifact], add]

    # Populated by Summary node
    summary: Optional[ExperimentSummary]

    # Populated by Output Formatter
    written_files: Annotated[List[str], add]

    # ==================== METADATA SECTION ====================
    workflow_status: str  # initialized, configured, summarized, complete, error
    errors: Annotated[List[str], add]  # Error messages (append-only)
    exit_code: Annotated[int, _max_reducer]  # Highest exit code raised by any node
    agent_trace: Annotated[List[str], add]  # Which nodes have run (append-only)
    timestamp: str  # Last update timestamp


class SeedTask(TypedDict):
    """Payload sent to one seed-runner task"""
    config: ExperimentConfig
    seed: int
    mode: str
    weights_path: Optional[str]
    output_dir: str
