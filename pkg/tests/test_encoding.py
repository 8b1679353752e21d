"""
Test state encoding, fairness bins and the action grid
"""
import numpy as np
import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from src.models.encoding_model import ActionGrid, FairnessPartition, State
from src.simulation.encoding import bin_of, encode_state, nearest_action


# ============================================================
# FairnessPartition / bin_of
# ============================================================

def test_merged_layout_worked_example():
    partition = FairnessPartition(mesh=1 / 3, top_bin="merged")
    state = encode_state(1, 0.89, partition, n_groups=4)
    assert state.vector().tolist() == [0, 1, 0, 0, 0, 0, 1]
    assert state.dimension == 7


def test_separate_layout_default_mesh():
    partition = FairnessPartition()
    assert partition.n_bins == 101
    assert bin_of(0.005, partition) == 0
    assert bin_of(0.5, partition) == 50
    assert bin_of(1.0, partition) == 100
    assert encode_state(0, 1.0, partition, n_groups=4).dimension == 105


def test_merged_layout_closes_last_bin():
    partition = FairnessPartition(mesh=0.25, top_bin="merged")
    assert partition.n_bins == 4
    assert bin_of(1.0, partition) == 3
    assert bin_of(0.75, partition) == 3
    assert bin_of(0.74, partition) == 2


def test_bin_boundaries_are_half_open():
    partition = FairnessPartition(mesh=0.1)
    assert bin_of(0.3, partition) == 3
    assert bin_of(0.2999, partition) == 2


@pytest.mark.parametrize("mesh", [0.3, 0.0, 1.5])
def test_invalid_partition_mesh(mesh):
    with pytest.raises(ValidationError):
        FairnessPartition(mesh=mesh)


def test_unknown_top_bin_layout():
    with pytest.raises(ValidationError):
        FairnessPartition(top_bin="overflow")


@given(st.floats(min_value=0, max_value=1), st.floats(min_value=0, max_value=1))
def test_bin_of_monotone(f1, f2):
    partition = FairnessPartition()
    lo, hi = sorted((f1, f2))
    assert bin_of(lo, partition) <= bin_of(hi, partition)


# ============================================================
# encode_state
# ============================================================

@given(st.integers(min_value=0, max_value=3), st.floats(min_value=0, max_value=1))
def test_state_is_two_hot(group_id, fairness):
    partition = FairnessPartition()
    x = encode_state(group_id, fairness, partition, n_groups=4).vector()
    assert x.sum() == 2
    assert x[:4].sum() == 1 and x[group_id] == 1
    assert x[4:].sum() == 1


@pytest.mark.parametrize("fairness,expected_bin", [(-0.2, 0), (1.3, 100)])
def test_out_of_range_fairness_is_clamped(fairness, expected_bin, caplog):
    state = encode_state(2, fairness, FairnessPartition(), n_groups=4)
    assert state.clamped
    assert state.fairness_bin == expected_bin
    assert "clamping" in caplog.text


def test_in_range_fairness_not_flagged():
    assert not encode_state(2, 0.4, FairnessPartition(), n_groups=4).clamped


def test_group_out_of_range_rejected():
    with pytest.raises(ValidationError):
        State(group_id=4, fairness_bin=0, n_groups=4, n_bins=101)


# ============================================================
# ActionGrid / nearest_action
# ============================================================

def test_default_grid():
    grid = ActionGrid()
    assert grid.size == 101
    assert grid.values[0] == 0.0
    assert grid.values[-1] == 10.0
    assert grid.values[50] == pytest.approx(5.0)


@pytest.mark.parametrize("price,index", [(5.0, 50), (-1.0, 0), (5.04, 50), (5.06, 51), (99.0, 100)])
def test_nearest_action(price, index):
    assert nearest_action(price, ActionGrid()) == index


def test_grid_values_round_trip():
    grid = ActionGrid()
    indices = [nearest_action(v, grid) for v in grid.values]
    assert indices == list(range(grid.size))


def test_custom_grid():
    grid = ActionGrid(min_price=1.0, max_price=2.0, mesh=0.25)
    assert grid.size == 5
    assert np.allclose(grid.values, [1.0, 1.25, 1.5, 1.75, 2.0])


@pytest.mark.parametrize("kwargs", [
    {"mesh": 0.3},
    {"min_price": 5.0, "max_price": 5.0},
    {"mesh": -0.1},
])
def test_invalid_grid(kwargs):
    with pytest.raises(ValidationError):
        ActionGrid(**kwargs)


def test_unit_interval_ends_hit_first_and_last_bins():
    partition = FairnessPartition()
    assert encode_state(0, 0.0, partition, n_groups=4).active == (0, 4)
    assert encode_state(3, 1.0, partition, n_groups=4).active == (3, 104)
