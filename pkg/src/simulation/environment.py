"""
Synthetic customer population

Customers belong to groups; a group answers a bid a with acceptance
probability 1 / (1 + exp(-(b + w*a))). Customers carry no state besides
their group.
"""
import logging
from typing import Sequence, Tuple

import numpy as np
from scipy.special import expit

from src.config import REJECTION_PENALTY
from src.errors import ConfigError
from src.models.encoding_model import ActionGrid
from src.models.market_model import BidOutcome, GroupSpec, Population

logger = logging.getLogger(__name__)


def acceptance_probability(a: float, group: GroupSpec) -> float:
    """Logistic acceptance probability of bid a for a customer of the group"""
    return float(expit(group.b + group.w * a))


def respond(a: float, group: GroupSpec, rng: np.random.Generator,
            nu: float = REJECTION_PENALTY) -> BidOutcome:
    """
    Draw one Bernoulli response. Accepted bids keep their price, rejected
    bids carry the penalty nu.
    """
    accepted = bool(rng.random() < acceptance_probability(a, group))
    return BidOutcome(
        accepted=accepted,
        price=float(a) if accepted else nu,
        group_id=group.id
    )


def allocate_customers(groups: Sequence[GroupSpec], n_customers: int) -> list:
    """
    Split n_customers across groups proportionally to their shares
    (largest remainder, ties to the lower group index).
    """
    shares = np.array([g.share for g in groups], dtype=float)
    quotas = shares / shares.sum() * n_customers
    counts = np.floor(quotas).astype(int)
    remainder = n_customers - int(counts.sum())
    order = np.argsort(-(quotas - counts), kind="stable")
    counts[order[:remainder]] += 1
    return counts.tolist()


def build_population(groups: Sequence[GroupSpec], n_customers: int,
                     rng: np.random.Generator, seed: int = 0) -> Population:
    """
    Draw a fresh roster: group sizes follow the shares, customer ids are a
    random permutation so rosters differ between epochs.
    """
    if n_customers <= 0:
        raise ConfigError("roster needs at least one customer", field="agent.customers_per_epoch")
    counts = allocate_customers(groups, n_customers)
    ids = rng.permutation(n_customers)
    customers = []
    cursor = 0
    for group, count in zip(groups, counts):
        for cid in ids[cursor:cursor + count]:
            customers.append((int(cid), group.id))
        cursor += count
    logger.debug("Roster drawn: %s customers per group", counts)
    return Population(groups=list(groups), customers=customers, seed=seed)


def sample_customer(population: Population, rng: np.random.Generator) -> Tuple[int, int]:
    """Uniform draw of one (customer id, group id) from the roster"""
    if not population.customers:
        raise ConfigError("cannot sample from an empty roster", field="population.customers")
    return population.customers[int(rng.integers(len(population.customers)))]


def analytic_reject_ratio(groups: Sequence[GroupSpec], grid: ActionGrid) -> float:
    """
    Expected rejection ratio of a uniform-random pricing policy: 1 - phi
    averaged over the grid and over groups weighted by their shares.
    """
    shares = np.array([g.share for g in groups], dtype=float)
    shares /= shares.sum()
    rejects = [
        float(np.mean(1.0 - expit(g.b + g.w * grid.values))) for g in groups
    ]
    return float(np.dot(shares, rejects))


def min_reject_ratio(groups: Sequence[GroupSpec], grid: ActionGrid) -> float:
    """
    Lowest rejection ratio any pricing policy on the grid can reach: every
    group offered its most-accepted price, weighted by group shares.
    """
    shares = np.array([g.share for g in groups], dtype=float)
    shares /= shares.sum()
    floors = [
        float(np.min(1.0 - expit(g.b + g.w * grid.values))) for g in groups
    ]
    return float(np.dot(shares, floors))
