"""
Dual-objective Gaussian reward over price and fairness
"""
import math

from src.config import REJECTION_PENALTY
from src.models.market_model import BidOutcome
from src.models.reward_model import RewardParams


def reward(p: float, f: float, params: RewardParams) -> float:
    """
    beta_p*exp(-(p-p_t)^2/sigma_p) + beta_f*exp(-(f-f_t)^2/sigma_f),
    divided by beta_p + beta_f so it lies in [0, 1]. Zero weights give 0.
    """
    total = params.beta_p + params.beta_f
    if total == 0:
        return 0.0
    price_term = params.beta_p * math.exp(-((p - params.p_target) ** 2) / params.sigma_p)
    fairness_term = params.beta_f * math.exp(-((f - params.f_target) ** 2) / params.sigma_f)
    return (price_term + fairness_term) / total


def price_outcome(bid: float, outcome: BidOutcome, a_max: float,
                  nu: float = REJECTION_PENALTY) -> float:
    """Normalized price: bid / a_max when accepted, nu when rejected"""
    return bid / a_max if outcome.accepted else nu


def rejection_ends_return(params: RewardParams) -> bool:
    """
    Whether a rejected bid short-circuits the TD target to nu. The rejected
    price only reaches the reward through the revenue term, so with
    beta_p = 0 a rejection earns the same reward as a sale and the target
    keeps bootstrapping.
    """
    return params.beta_p > 0
