"""
Jain's index and the rotated variant used as the fairness signal.

Rotated Jain = Jain's index of (a_max - mean) per group, so it rewards low
and homogeneous prices. Both indices return 1.0 on the 0/0 case (all entries
zero), the homogeneous limit.
"""
from typing import Sequence, Union

import numpy as np

from src.errors import InternalError
from src.models.fairness_model import GroupAverages

Means = Union[GroupAverages, Sequence[float], np.ndarray]


def _as_array(means: Means) -> np.ndarray:
    if isinstance(means, GroupAverages):
        return np.asarray(means.means, dtype=float)
    return np.asarray(means, dtype=float)


def jain_index(means: Means) -> float:
    """(sum x)^2 / (n * sum x^2)"""
    x = _as_array(means)
    if x.size == 0:
        raise InternalError("jain_index needs at least one group")
    squares = float(np.dot(x, x))
    if squares == 0.0:
        return 1.0
    return min(float(x.sum() ** 2 / (x.size * squares)), 1.0)


def rotated_jain(means: Means, a_max: float) -> float:
    """Jain's index of (a_max - mean), means above a_max are clamped to it"""
    x = np.minimum(_as_array(means), a_max)
    return jain_index(a_max - x)


def update_average(averages: GroupAverages, group_id: int, price: float) -> GroupAverages:
    """Fold one price into the running mean of its group"""
    if not 0 <= group_id < len(averages.means):
        raise InternalError(f"unknown group id {group_id}")
    means = list(averages.means)
    counts = list(averages.counts)
    counts[group_id] += 1
    means[group_id] += (price - means[group_id]) / counts[group_id]
    return GroupAverages.model_construct(means=means, counts=counts)
