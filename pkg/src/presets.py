"""
Built-in experiments. Hyper-parameters follow the five reference runs:
revenue only, fairness only, two fairness targets, and the random null model.
"""
from typing import Any, Dict

PRESETS: Dict[str, Dict[str, Any]] = {
    "exp1": {
        "name": "exp1",
        "description": "Revenue only",
        "reward": {"beta_p": 1.0, "beta_f": 0.0, "p_target": 1.0},
    },
    "exp2": {
        "name": "exp2",
        "description": "Fairness only",
        "reward": {"beta_p": 0.0, "beta_f": 1.0, "f_target": 1.0},
    },
    "exp3": {
        "name": "exp3",
        "description": "Revenue with fairness target 0.90",
        "reward": {"beta_p": 1.0, "beta_f": 1.0, "p_target": 1.0, "f_target": 0.90},
    },
    "exp4": {
        "name": "exp4",
        "description": "Revenue with fairness target 0.75",
        "reward": {"beta_p": 1.0, "beta_f": 1.0, "p_target": 1.0, "f_target": 0.75},
    },
    "exp5": {
        "name": "exp5",
        "description": "Null model: random bids, zero reward",
        "reward": {"beta_p": 0.0, "beta_f": 0.0},
        "agent": {"epsilon_pinned": 1.0},
    },
}
