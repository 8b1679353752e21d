"""
Multi-seed summary, computed only from the emitted metrics CSVs so an
external script can reproduce it.
"""
from pathlib import Path
from typing import Dict, List, Sequence, Union

import numpy as np

from src.config import TREND_WINDOW
from src.models.stats_model import ExperimentSummary, MetricSummary
from src.reporting.csv_writer import read_csv
from src.reporting.metrics import learning_rate_trend, min_max_scale

SUMMARY_COLUMNS = ["cum_bid", "mean_fairness", "reject_ratio", "expected_revenue"]


def _mean_std(values: Sequence[float]) -> MetricSummary:
    """Mean and sample standard deviation (0 for a single seed)"""
    arr = np.asarray(values, dtype=float)
    std = float(arr.std(ddof=1)) if arr.size > 1 else 0.0
    return MetricSummary(mean=float(arr.mean()), std=std)


def summarize_seeds(name: str, csv_paths: Dict[int, Union[str, Path]], window: int,
                    trend_window: int = TREND_WINDOW) -> ExperimentSummary:
    """
    Per seed: mean of each column over the last `window` epochs. Across seeds:
    mean and sample std of those window means.
    """
    seeds = sorted(csv_paths)
    per_seed: Dict[str, List[float]] = {}
    trends = []
    reward_curves = []
    for seed in seeds:
        frame = read_csv(csv_paths[seed])
        tail = frame.tail(window)
        columns = SUMMARY_COLUMNS + [c for c in frame.columns if c.endswith("_mean")
                                     and c.startswith("g")]
        for column in columns:
            per_seed.setdefault(column, []).append(float(tail[column].mean()))
        trends.append(learning_rate_trend(frame["lr_step"].tolist(), trend_window))
        reward_curves.append(np.cumsum(frame["mean_reward_scaled"].to_numpy(dtype=float)))

    shortest = min(len(c) for c in reward_curves)
    mean_curve = np.mean([c[:shortest] for c in reward_curves], axis=0)
    return ExperimentSummary(
        name=name,
        seeds=seeds,
        window=window,
        metrics={column: _mean_std(values) for column, values in per_seed.items()},
        lr_trend=float(np.mean(trends)),
        reward_curve_scaled=min_max_scale(mean_curve.tolist())
    )
