"""
Config Loader Agent
Resolves the preset/config file and CLI overrides into an ExperimentConfig
"""
from datetime import datetime
from pathlib import Path
from typing import Any, Dict

from src.config import resolve_output_root
from src.config_loader import load_config
from src.errors import PricingError
from src.models.state_model import RunnerState


def load_experiment_config(state: RunnerState) -> Dict[str, Any]:
    """
    Config Loader Agent

    Reads: config_source, overrides, mode, output_root from state
    Writes: config, output_dir, workflow_status, agent_trace, errors/exit_code
    """
    print("\n🔍 Config Loader: Starting...")

    source = state.get("config_source")
    if not source:
        error_msg = "No config source provided"
        print(f"❌ Error: {error_msg}")
        return {
            "errors": [error_msg],
            "exit_code": 1,
            "workflow_status": "error",
            "agent_trace": ["config_loader_agent"],
            "timestamp": datetime.now().isoformat()
        }

    try:
        config = load_config(source, state.get("overrides"))
    except PricingError as e:
        error_msg = f"Failed to load config: {e}"
        print(f"❌ Error: {error_msg}")
        return {
            "errors": [error_msg],
            "exit_code": e.exit_code,
            "workflow_status": "error",
            "agent_trace": ["config_loader_agent"],
            "timestamp": datetime.now().isoformat()
        }

    if config.output_dir:
        output_dir = Path(config.output_dir)
    else:
        root = Path(state["output_root"]) if state.get("output_root") else resolve_output_root()
        output_dir = root / config.name
    if state.get("mode") == "evaluate":
        output_dir = output_dir / "evaluation"

    print(f"✅ Loaded experiment: {config.name} ({config.description or 'custom'})")
    print(f"   Reward: beta_p={config.reward.beta_p} beta_f={config.reward.beta_f} "
          f"p_t={config.reward.p_target} f_t={config.reward.f_target}")
    print(f"   Epochs x bids: {config.agent.epochs} x {config.agent.bids_per_epoch}")
    print(f"   Seeds: {config.seeds}")

    return {
        "config": config,
        "output_dir": str(output_dir),
        "workflow_status": "configured",
        "agent_trace": ["config_loader_agent"],
        "timestamp": datetime.now().isoformat()
    }


# Agent metadata for documentation
AGENT_INFO = {
    "name": "Config Loader Agent",
    "responsibility": "Resolve and validate the experiment configuration",
    "reads_from_state": ["config_source", "overrides", "mode", "output_root"],
    "writes_to_state": ["config", "output_dir", "workflow_status", "agent_trace", "errors", "exit_code"],
    "dependencies": []
}
