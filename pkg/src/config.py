"""
Configuration settings for the fair dynamic pricing simulator
"""
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
OUTPUT_ROOT_ENV_VAR = "FAIR_PRICING_OUTPUT_ROOT"
DEFAULT_OUTPUTS_DIR = PROJECT_ROOT / "outputs"

# Synthetic market: (b, w) of the logistic acceptance curve per group
DEFAULT_GROUPS = [
    {"id": 0, "b": 18.229, "w": -2.369},
    {"id": 1, "b": 4.4757, "w": -1.1526},
    {"id": 2, "b": -1.09195, "w": 0.34},
    {"id": 3, "b": 0.0, "w": 0.0},
]
DEFAULT_CUSTOMERS_PER_EPOCH = 100

# Training loop
DEFAULT_EPOCHS = 350
DEFAULT_BIDS_PER_EPOCH = 1000
EPSILON_DECAY = 20.0  # epsilon(t) = exp(-t / EPSILON_DECAY)
DEFAULT_GAMMA = 0.9
INIT_WEIGHT_SCALE = 0.01  # weights ~ U[-scale, scale], bias = 0

# Adam
LEARNING_RATE = 0.01
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPSILON = 1e-8

# Reward
DEFAULT_SIGMA = 0.1
REJECTION_PENALTY = -0.5  # nu, in normalized price units

# Discretization
DEFAULT_MIN_PRICE = 0.0
DEFAULT_MAX_PRICE = 10.0
DEFAULT_PRICE_MESH = 0.1
DEFAULT_FAIRNESS_MESH = 0.01

# Seeds and reporting
DEFAULT_SEED = 0
DEFAULT_SEED_COUNT = 3
SUMMARY_WINDOW = 50  # trailing epochs summarized per seed
TREND_WINDOW = 100  # trailing epochs used for the learning-rate trend
CSV_FLOAT_FORMAT = "%.6g"

# Option values
FAIRNESS_TRACKING_MODES = ["offered", "accepted"]
NEXT_STATE_GROUP_MODES = ["next_draw", "same_customer"]
LR_METRIC_MODES = ["cumulative", "per_epoch", "inverse_cumulative"]
TOP_BIN_LAYOUTS = ["separate", "merged"]

# Output file names
METRICS_FILE_TEMPLATE = "metrics_seed{seed}.csv"
EVALUATION_FILE_TEMPLATE = "evaluation_seed{seed}.csv"
WEIGHTS_FILE_TEMPLATE = "weights_seed{seed}.fqnet"
TRANSITIONS_FILE_TEMPLATE = "transitions_seed{seed}.jsonl"
SUMMARY_OUTPUT_FILE = "summary.json"
CONFIG_OUTPUT_FILE = "config.json"


def resolve_output_root() -> Path:
    """Output root from the environment, falling back to ./outputs"""
    override = os.getenv(OUTPUT_ROOT_ENV_VAR)
    return Path(override) if override else DEFAULT_OUTPUTS_DIR
