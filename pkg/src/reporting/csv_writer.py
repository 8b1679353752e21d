"""
Metrics CSV emission and read-back
"""
from pathlib import Path
from typing import List, Sequence, Union

import pandas as pd

from src.config import CSV_FLOAT_FORMAT
from src.errors import OutputError
from src.models.stats_model import EpochStats
from src.reporting.metrics import running_average

BASE_COLUMNS = [
    "epoch",
    "epsilon",
    "cum_bid",
    "run_avg_cum_bid",
    "mean_fairness",
    "run_avg_fairness",
    "reject_ratio",
    "expected_revenue",
    "mean_reward_scaled",
    "lr_metric",
    "lr_step",
]


def group_columns(n_groups: int) -> List[str]:
    """g1_mean .. gk_mean, 1-based like the group labels in reports"""
    return [f"g{i + 1}_mean" for i in range(n_groups)]


def stats_frame(stats: Sequence[EpochStats]) -> pd.DataFrame:
    n_groups = len(stats[0].group_means)
    frame = pd.DataFrame({
        "epoch": [s.epoch for s in stats],
        "epsilon": [s.epsilon for s in stats],
        "cum_bid": [s.cum_bid for s in stats],
        "run_avg_cum_bid": running_average([s.cum_bid for s in stats]),
        "mean_fairness": [s.mean_fairness for s in stats],
        "run_avg_fairness": running_average([s.mean_fairness for s in stats]),
        "reject_ratio": [s.reject_ratio for s in stats],
        "expected_revenue": [s.expected_revenue for s in stats],
        "mean_reward_scaled": [s.mean_reward_scaled for s in stats],
        "lr_metric": [s.lr_metric for s in stats],
        "lr_step": [s.lr_step for s in stats],
    })
    for i, column in enumerate(group_columns(n_groups)):
        frame[column] = [s.group_means[i] for s in stats]
    return frame


def emit_csv(stats: Sequence[EpochStats], destination: Union[str, Path]) -> Path:
    """
    Header row then one row per epoch, floats with 6 significant digits.
    Columns: BASE_COLUMNS followed by one gN_mean column per group.
    """
    destination = Path(destination)
    if not stats:
        raise OutputError("no epoch statistics to write", path=str(destination))
    try:
        destination.parent.mkdir(parents=True, exist_ok=True)
        stats_frame(stats).to_csv(
            destination, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"
        )
    except OSError as e:
        raise OutputError(f"failed to write metrics CSV: {e}", path=str(destination)) from e
    return destination


def read_csv(path: Union[str, Path]) -> pd.DataFrame:
    path = Path(path)
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise OutputError(f"failed to read metrics CSV: {e}", path=str(path)) from e
    missing = [c for c in BASE_COLUMNS if c not in frame.columns]
    if missing:
        raise OutputError(f"metrics CSV is missing columns {missing}", path=str(path))
    return frame
