"""
State encoding and action lookup
"""
import logging

import numpy as np

from src.models.encoding_model import ActionGrid, FairnessPartition, State

logger = logging.getLogger(__name__)


def bin_of(fairness: float, partition: FairnessPartition) -> int:
    """Index of the partition interval containing the value (clamped to [0, 1])"""
    return partition.bin_index(min(max(fairness, 0.0), 1.0))


def encode_state(group_id: int, fairness: float, partition: FairnessPartition,
                 n_groups: int) -> State:
    """
    Two-hot state for a customer of group_id under the given fairness.
    Out-of-range fairness is clamped; the state records that it happened.
    """
    clamped = not 0.0 <= fairness <= 1.0
    if clamped:
        logger.warning("Fairness %.6f outside [0, 1], clamping", fairness)
    return State(
        group_id=group_id,
        fairness_bin=bin_of(fairness, partition),
        n_groups=n_groups,
        n_bins=partition.n_bins,
        clamped=clamped
    )


def nearest_action(price: float, grid: ActionGrid) -> int:
    """Grid index closest to price; ties go to the lower index"""
    return int(np.argmin(np.abs(grid.values - price)))
