"""
Summary Agent
Aggregates the final-window statistics of every seed from the emitted CSVs
"""
from datetime import datetime
from typing import Any, Dict

from src.errors import PricingError
from src.models.state_model import RunnerState
from src.reporting.summary import summarize_seeds


def summarize_experiment(state: RunnerState) -> Dict[str, Any]:
    """
    Summary Agent

    Reads: config, seed_results, errors from state
    Writes: summary, workflow_status, agent_trace
    """
    print("\n📊 Summary Agent: Starting...")

    config = state.get("config")
    results = state.get("seed_results", [])
    if state.get("errors") or not results or config is None:
        print("⚠️  Skipped: summary (seed runs incomplete)")
        return {
            "workflow_status": "error",
            "agent_trace": ["summary_agent"],
            "timestamp": datetime.now().isoformat()
        }

    csv_paths = {artifact.seed: artifact.csv_path for artifact in results}
    window = min(config.summary_window, config.agent.epochs)
    try:
        summary = summarize_seeds(config.name, csv_paths, window)
    except PricingError as e:
        error_msg = f"Failed to summarize {config.name}: {e}"
        print(f"❌ Error: {error_msg}")
        return {
            "errors": [error_msg],
            "exit_code": e.exit_code,
            "workflow_status": "error",
            "agent_trace": ["summary_agent"],
            "timestamp": datetime.now().isoformat()
        }

    for metric in ("cum_bid", "mean_fairness", "reject_ratio", "expected_revenue"):
        stat = summary.metrics[metric]
        print(f"   {metric}: {stat.mean:.4f} ± {stat.std:.4f}")

    return {
        "summary": summary,
        "workflow_status": "summarized",
        "agent_trace": ["summary_agent"],
        "timestamp": datetime.now().isoformat()
    }


# Agent metadata
AGENT_INFO = {
    "name": "Summary Agent",
    "responsibility": "Mean ± std of final-window statistics across seeds",
    "reads_from_state": ["config", "seed_results"],
    "writes_to_state": ["summary", "workflow_status", "agent_trace"],
    "dependencies": ["seed_runner_agent"]
}
