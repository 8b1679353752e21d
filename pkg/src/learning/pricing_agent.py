"""
Pricing agent: epsilon-greedy Q-learning over the synthetic market.

Each bid of an epoch runs, in order: pick action -> customer responds ->
update group averages -> fairness -> reward -> next state -> TD target ->
one gradient step. Group averages restart from zero every epoch.
"""
import logging
import math
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from src.config import EPSILON_DECAY
from src.errors import ConfigError, TrainingFault
from src.learning.qnet import (
    forward,
    greedy_action,
    init_adam,
    init_qnet,
    load_qnet,
    td_target,
    train_step,
)
from src.models.encoding_model import State
from src.models.experiment_model import ExperimentConfig
from src.models.fairness_model import GroupAverages
from src.models.market_model import Population
from src.models.qnet_model import AdamState, QNet
from src.models.stats_model import EpochStats, ExperimentResult, TransitionRecord
from src.reporting.metrics import VisitCounter, cumulative_bid, expected_revenue
from src.reporting.transition_log import write_transition_log
from src.simulation.encoding import encode_state
from src.simulation.environment import build_population, respond, sample_customer
from src.simulation.fairness import rotated_jain, update_average
from src.simulation.reward import price_outcome, rejection_ends_return, reward

logger = logging.getLogger(__name__)


def epsilon(t: int, decay: float = EPSILON_DECAY) -> float:
    """exp(-t / decay) for epoch t >= 0"""
    if t < 0:
        raise ValueError(f"epoch index must be non-negative, got {t}")
    return math.exp(-t / decay)


def select_action(net: QNet, state, eps: float, rng: np.random.Generator) -> Tuple[int, bool]:
    """
    Uniform random action with probability eps, greedy otherwise.

    Returns:
        (action, explored): the grid index and whether it was drawn at
        random. One uniform draw is always consumed, so the stream stays
        aligned whatever eps is.
    """
    if rng.random() < eps:
        return int(rng.integers(net.n_actions)), True
    return greedy_action(net, state), False


def run_epoch(config: ExperimentConfig, net: QNet, adam: AdamState, population: Population,
              rng: np.random.Generator, epoch: int = 0, eps: float = 1.0,
              visits: Optional[VisitCounter] = None,
              train: bool = True) -> Tuple[EpochStats, List[TransitionRecord]]:
    """
    Simulate config.agent.bids_per_epoch bids, training after each one unless
    train is False.
    """
    agent = config.agent
    params = config.reward
    groups = config.groups
    partition = config.partition
    prices = config.grid.values
    a_max = config.grid.max_price
    n_groups = config.n_groups
    n_bids = agent.bids_per_epoch
    terminal_on_reject = rejection_ends_return(params)
    visits = visits or VisitCounter(agent.lr_metric_mode)
    visits.start_epoch()

    averages = GroupAverages.empty(n_groups)
    fairness = rotated_jain(averages, a_max)
    records: List[TransitionRecord] = []
    price_outcomes = []
    fairness_trace = []
    rewards = []
    rejects = explored_count = clamps = 0

    state: Optional[State] = None
    for i in range(1, n_bids + 1):
        if state is None:
            _, group_id = sample_customer(population, rng)
            state = encode_state(group_id, fairness, partition, n_groups)
        group_id = state.group_id
        state_fairness = fairness
        clamps += state.clamped

        action, explored = select_action(net, state, eps, rng)
        bid = float(prices[action])
        outcome = respond(bid, groups[group_id], rng, nu=params.nu)

        if agent.fairness_tracking == "offered" or outcome.accepted:
            averages = update_average(averages, group_id, bid)
        fairness = rotated_jain(averages, a_max)

        p = price_outcome(bid, outcome, a_max, params.nu)
        r = reward(p, fairness, params)

        _, next_group = sample_customer(population, rng)
        s_next = encode_state(next_group, fairness, partition, n_groups)
        if agent.next_state_group == "same_customer":
            target_state = s_next.model_copy(update={"group_id": group_id})
        else:
            target_state = s_next

        y = td_target(r, target_state, net, agent.gamma,
                      terminal_on_reject and not outcome.accepted, params.nu)
        if train:
            try:
                _, _, loss = train_step(net, adam, state, action, y)
            except TrainingFault as fault:
                fault.diagnostics.update({"epoch": epoch, "iteration": i, "group_id": group_id})
                raise
        else:
            loss = (y - float(forward(net, state)[action])) ** 2

        visits.record((group_id, state.fairness_bin, action))
        rejects += not outcome.accepted
        explored_count += explored
        price_outcomes.append(outcome.price)
        fairness_trace.append(fairness)
        rewards.append(r)
        records.append(TransitionRecord.model_construct(
            epoch=epoch, iteration=i, group_id=group_id, fairness_bin=state.fairness_bin,
            action=action, bid=bid, accepted=outcome.accepted, price=outcome.price,
            explored=explored, fairness=fairness, state_fairness=state_fairness,
            reward=r, target=y, loss=loss
        ))
        state = s_next

    cum_bid = cumulative_bid(price_outcomes)
    reject_ratio = rejects / n_bids if n_bids else 0.0
    stats = EpochStats(
        epoch=epoch,
        epsilon=eps,
        cum_bid=cum_bid,
        mean_fairness=float(np.mean(fairness_trace)) if fairness_trace else fairness,
        reject_count=rejects,
        reject_ratio=reject_ratio,
        expected_revenue=expected_revenue(cum_bid, reject_ratio),
        group_means=list(averages.means),
        mean_reward_scaled=float(np.mean(rewards)) if rewards else 0.0,
        lr_metric=visits.metric(),
        lr_step=visits.step_size(),
        bids=n_bids,
        explored=explored_count,
        clamp_warnings=clamps
    )
    return stats, records


def run_experiment(config: ExperimentConfig, seed: Optional[int] = None,
                   net: Optional[QNet] = None, adam: Optional[AdamState] = None,
                   train: bool = True,
                   transition_log: Optional[Union[str, Path]] = None) -> ExperimentResult:
    """
    Run config.agent.epochs epochs for one seed. A fresh network is built
    from the seed unless one is passed in.
    """
    agent = config.agent
    seed = config.seeds[0] if seed is None else seed
    rng = np.random.default_rng(seed)
    if net is None:
        net = init_qnet(config.state_dimension, config.grid.size, rng, agent.init_scale)
    if adam is None:
        adam = init_adam(net, agent.learning_rate, agent.adam_beta1,
                         agent.adam_beta2, agent.adam_epsilon)
    if transition_log is not None:
        transition_log = Path(transition_log)
        transition_log.unlink(missing_ok=True)

    visits = VisitCounter(agent.lr_metric_mode)
    stats: List[EpochStats] = []
    for t in range(agent.epochs):
        eps = agent.epsilon_pinned if agent.epsilon_pinned is not None \
            else epsilon(t, agent.epsilon_decay)
        population = build_population(config.groups, agent.customers_per_epoch, rng, seed)
        epoch_stats, records = run_epoch(config, net, adam, population, rng,
                                         epoch=t, eps=eps, visits=visits, train=train)
        stats.append(epoch_stats)
        if transition_log is not None:
            write_transition_log(records, transition_log)
        logger.debug(
            "%s seed=%s epoch=%d eps=%.4f cum_bid=%.1f fairness=%.3f rejects=%.3f",
            config.name, seed, t, eps, epoch_stats.cum_bid,
            epoch_stats.mean_fairness, epoch_stats.reject_ratio
        )

    return ExperimentResult(
        name=config.name,
        seed=seed,
        stats=stats,
        net=net,
        adam=adam,
        transition_log=str(transition_log) if transition_log is not None else None
    )


def evaluate(weights_path: Union[str, Path], config: ExperimentConfig,
             seed: Optional[int] = None,
             transition_log: Optional[Union[str, Path]] = None) -> ExperimentResult:
    """Greedy rollout (epsilon = 0, no updates) of saved weights"""
    net, adam = load_qnet(weights_path)
    if net.n_inputs != config.state_dimension or net.n_actions != config.grid.size:
        raise ConfigError(
            f"weights shape ({net.n_actions}, {net.n_inputs}) does not match config "
            f"({config.grid.size}, {config.state_dimension})",
            field="grid/partition"
        )
    greedy = config.model_copy(
        update={"agent": config.agent.model_copy(update={"epsilon_pinned": 0.0})}
    )
    return run_experiment(greedy, seed=seed, net=net, adam=adam, train=False,
                          transition_log=transition_log)
