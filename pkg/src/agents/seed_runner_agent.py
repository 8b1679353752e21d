"""
Seed Runner Agent
Trains (or evaluates) one seed of the experiment and writes its artifacts
"""
from pathlib import Path
from typing import Any, Dict

from src.config import (
    EVALUATION_FILE_TEMPLATE,
    METRICS_FILE_TEMPLATE,
    TRANSITIONS_FILE_TEMPLATE,
    WEIGHTS_FILE_TEMPLATE,
)
from src.errors import PricingError, TrainingFault
from src.learning.pricing_agent import evaluate, run_experiment
from src.learning.qnet import save_qnet
from src.models.state_model import SeedTask
from src.models.stats_model import SeedArtifact
from src.reporting.csv_writer import emit_csv


def run_seed(task: SeedTask) -> Dict[str, Any]:
    """
    Seed Runner Agent

    Reads: one SeedTask (config, seed, mode, weights_path, output_dir)
    Writes: seed_results, written_files, agent_trace, errors/exit_code

    Runs as one parallel task per seed; each task owns its rng, network and files.
    Leaves timestamp alone since sibling tasks finish in the same step.
    """
    config = task["config"]
    seed = task["seed"]
    mode = task.get("mode", "train")
    output_dir = Path(task["output_dir"])
    trace = f"seed_runner_agent[{seed}]"
    print(f"\n🎯 Seed Runner: {config.name} seed {seed} ({mode})...")

    log_path = None
    if config.agent.log_transitions:
        log_path = output_dir / TRANSITIONS_FILE_TEMPLATE.format(seed=seed)

    try:
        if mode == "evaluate":
            result = evaluate(task["weights_path"], config, seed=seed, transition_log=log_path)
            csv_path = emit_csv(result.stats, output_dir / EVALUATION_FILE_TEMPLATE.format(seed=seed))
            weights_path = None
        else:
            result = run_experiment(config, seed=seed, transition_log=log_path)
            csv_path = emit_csv(result.stats, output_dir / METRICS_FILE_TEMPLATE.format(seed=seed))
            weights_path = save_qnet(output_dir / WEIGHTS_FILE_TEMPLATE.format(seed=seed),
                                     result.net, result.adam)
    except TrainingFault as e:
        error_msg = f"Training fault in {config.name} seed {seed}: {e} {e.diagnostics}"
        print(f"❌ Error: {error_msg}")
        return {
            "errors": [error_msg],
            "exit_code": e.exit_code,
            "agent_trace": [trace]
        }
    except PricingError as e:
        error_msg = f"Seed {seed} of {config.name} failed: {e}"
        print(f"❌ Error: {error_msg}")
        return {
            "errors": [error_msg],
            "exit_code": e.exit_code,
            "agent_trace": [trace]
        }

    final = result.stats[-1]
    print(f"✅ Seed {seed} done: cum_bid={final.cum_bid:.1f} "
          f"fairness={final.mean_fairness:.3f} rejects={final.reject_ratio:.3f}")

    artifact = SeedArtifact(
        seed=seed,
        csv_path=str(csv_path),
        weights_path=str(weights_path) if weights_path else None,
        transition_log=result.transition_log,
        epochs=len(result.stats)
    )
    written = [p for p in (artifact.csv_path, artifact.weights_path, artifact.transition_log) if p]
    return {
        "seed_results": [artifact],
        "written_files": written,
        "agent_trace": [trace]
    }


# Agent metadata
AGENT_INFO = {
    "name": "Seed Runner Agent",
    "responsibility": "Run one seed and write its metrics CSV, weights and transition log",
    "reads_from_state": ["config", "output_dir", "mode", "weights_path"],
    "writes_to_state": ["seed_results", "written_files", "agent_trace", "errors", "exit_code"],
    "dependencies": ["config_loader_agent"]
}
