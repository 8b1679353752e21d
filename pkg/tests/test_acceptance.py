"""
Experiment-level behaviour. The null-model checks run by default; the
trained-policy comparisons need --runslow.
"""
import numpy as np
import pytest

from src.config_loader import load_config
from src.learning.pricing_agent import run_experiment
from src.reporting.csv_writer import emit_csv
from src.reporting.metrics import learning_rate_trend
from src.reporting.summary import summarize_seeds
from src.simulation.environment import analytic_reject_ratio, min_reject_ratio


@pytest.fixture(scope="module")
def null_run():
    config = load_config("exp5", {"epochs": 5, "bids": 1000, "seeds": [0]})
    return config, run_experiment(config)


def test_null_model_reject_ratio_matches_analytic(null_run):
    config, result = null_run
    observed = np.mean([s.reject_ratio for s in result.stats])
    assert observed == pytest.approx(analytic_reject_ratio(config.groups, config.grid), abs=0.05)


def test_null_model_prices_groups_alike(null_run):
    _, result = null_run
    means = np.mean([s.group_means for s in result.stats], axis=0)
    assert np.allclose(means, 5.0, atol=0.3)


def test_null_model_is_fair(null_run):
    _, result = null_run
    assert all(s.mean_fairness >= 0.95 for s in result.stats)
    assert all(s.explored == s.bids for s in result.stats)


def test_null_model_step_size_descends(null_run):
    _, result = null_run
    steps = [s.lr_step for s in result.stats]
    assert steps[-1] < steps[0] <= 1.0
    assert learning_rate_trend(steps, window=100) < 0


# ============================================================
# full-scale runs
# ============================================================

def final_window(name, directory, window=50):
    config = load_config(name)
    paths = {}
    for seed in config.seeds:
        result = run_experiment(config, seed=seed)
        paths[seed] = emit_csv(result.stats, directory / f"{name}_{seed}.csv")
    return summarize_seeds(name, paths, window)


@pytest.fixture(scope="module")
def summaries(tmp_path_factory):
    """Final-window summary per preset, each preset run once per module"""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = final_window(name, tmp_path_factory.mktemp(name))
        return cache[name]
    return get


@pytest.mark.slow
def test_fairness_only_policy_equalizes_groups(summaries):
    summary = summaries("exp2")
    assert summary.metrics["mean_fairness"].mean >= 0.95
    group_means = [summary.metrics[f"g{i}_mean"].mean for i in range(1, 5)]
    assert max(group_means) - min(group_means) <= 1.0


@pytest.mark.slow
def test_revenue_policy_earns_more_and_is_less_fair(summaries):
    revenue = summaries("exp1")
    fairness = summaries("exp2")
    assert revenue.metrics["expected_revenue"].mean >= 1.5 * fairness.metrics["expected_revenue"].mean
    assert revenue.metrics["mean_fairness"].mean < fairness.metrics["mean_fairness"].mean


@pytest.mark.slow
def test_higher_fairness_target_trades_revenue_for_fairness(summaries):
    strict = summaries("exp3")
    loose = summaries("exp4")
    assert strict.metrics["mean_fairness"].mean > loose.metrics["mean_fairness"].mean
    assert loose.metrics["expected_revenue"].mean > strict.metrics["expected_revenue"].mean


@pytest.mark.slow
@pytest.mark.parametrize("name", ["exp1", "exp3", "exp4"])
def test_trained_policies_hold_rejections_near_floor(summaries, name):
    config = load_config(name)
    floor = min_reject_ratio(config.groups, config.grid)
    null = analytic_reject_ratio(config.groups, config.grid)
    rejects = summaries(name).metrics["reject_ratio"].mean
    assert floor - 0.01 <= rejects <= floor + 0.03
    assert rejects < null


@pytest.mark.slow
@pytest.mark.parametrize("name", ["exp1", "exp2"])
def test_step_size_is_not_rising_at_the_end(summaries, name):
    assert summaries(name).lr_trend <= 0
