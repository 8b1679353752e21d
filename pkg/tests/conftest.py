"""Shared fixtures for the test suite"""
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from src.config import DEFAULT_GROUPS
from src.models.experiment_model import AgentConfig, ExperimentConfig
from src.models.market_model import GroupSpec


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run full-scale experiment checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-scale experiment runs (use --runslow)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def groups():
    """Default four customer groups"""
    return [GroupSpec(**g) for g in DEFAULT_GROUPS]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def small_config():
    """Default market and discretization, shrunk loop"""
    return ExperimentConfig(
        name="small",
        agent=AgentConfig(epochs=3, bids_per_epoch=200),
        seeds=[7]
    )
