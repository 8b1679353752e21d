"""
Epoch and experiment metrics
"""
from collections import Counter
from typing import Hashable, Iterable, List, Sequence

import numpy as np
from scipy.stats import spearmanr

from src.config import LR_METRIC_MODES


def cumulative_bid(outcomes: Iterable[float]) -> float:
    """Sum of price outcomes clamped to [0, inf): rejections contribute 0"""
    return float(sum(max(p, 0.0) for p in outcomes))


def expected_revenue(cum_bid: float, reject_ratio: float) -> float:
    """F_p * (1 - reject ratio)"""
    if not 0.0 <= reject_ratio <= 1.0:
        raise ValueError(f"reject_ratio must lie in [0, 1], got {reject_ratio}")
    return cum_bid * (1.0 - reject_ratio)


def learning_rate_metric(counts: Iterable[int]) -> float:
    """Mean visit count over distinct visited (state, action) pairs; 0 if none"""
    values = [c for c in counts if c > 0]
    if not values:
        return 0.0
    return float(np.mean(values))


class VisitCounter:
    """
    Visit counts of (state, action) pairs, cumulative over the experiment and
    for the current epoch.

    Also tracks the count-based step size 1/C(pair) each visit would get, so
    step_size() is the mean learning rate the epoch applied. It falls toward
    0 once the policy settles on pairs it has already visited.
    """

    def __init__(self, mode: str = "cumulative"):
        if mode not in LR_METRIC_MODES:
            raise ValueError(f"Invalid mode '{mode}'. Must be one of: {LR_METRIC_MODES}")
        self.mode = mode
        self.cumulative: Counter = Counter()
        self.epoch: Counter = Counter()
        self._step_sum = 0.0
        self._visits = 0

    def start_epoch(self) -> None:
        self.epoch = Counter()
        self._step_sum = 0.0
        self._visits = 0

    def record(self, pair: Hashable) -> None:
        self.cumulative[pair] += 1
        self.epoch[pair] += 1
        self._step_sum += 1.0 / self.cumulative[pair]
        self._visits += 1

    def step_size(self) -> float:
        """Mean of 1/C(pair) over this epoch's visits, counts taken at visit time"""
        return self._step_sum / self._visits if self._visits else 0.0

    def metric(self) -> float:
        if self.mode == "per_epoch":
            return learning_rate_metric(self.epoch.values())
        if self.mode == "inverse_cumulative":
            if not self.cumulative:
                return 0.0
            return float(np.mean([1.0 / c for c in self.cumulative.values()]))
        return learning_rate_metric(self.cumulative.values())


def running_average(values: Sequence[float]) -> List[float]:
    """Mean of values[0..t] for every t"""
    if not len(values):
        return []
    arr = np.asarray(values, dtype=float)
    return (np.cumsum(arr) / np.arange(1, arr.size + 1)).tolist()


def min_max_scale(values: Sequence[float]) -> List[float]:
    """Scale to [0, 1]; a constant series maps to zeros"""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        return []
    span = arr.max() - arr.min()
    if span == 0:
        return [0.0] * arr.size
    return ((arr - arr.min()) / span).tolist()


def learning_rate_trend(values: Sequence[float], window: int) -> float:
    """
    Spearman rho of the trailing window against epoch order. Negative means
    the metric is falling; a constant or too-short window gives 0.
    """
    tail = np.asarray(values, dtype=float)[-window:]
    if tail.size < 3 or np.all(tail == tail[0]):
        return 0.0
    rho = spearmanr(np.arange(tail.size), tail).statistic
    return 0.0 if np.isnan(rho) else float(rho)
