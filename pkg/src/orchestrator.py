"""
LangGraph Orchestrator
Coordinates config loading, per-seed runs, summary and output writing
"""
from typing import Any, Dict, List, Optional, Union

from langgraph.graph import END, START, StateGraph
from langgraph.constants import Send

from src.agents.config_loader_agent import load_experiment_config
from src.agents.output_formatter_agent import write_output_files
from src.agents.seed_runner_agent import run_seed
from src.agents.summary_agent import summarize_experiment
from src.models.state_model import RunnerState, SeedTask


def route_seeds(state: RunnerState) -> Union[str, List[Send]]:
    """Fan out one seed-runner task per seed, or stop on a config error"""
    config = state.get("config")
    if state.get("errors") or config is None:
        return END
    return [
        Send("seed_runner", SeedTask(
            config=config,
            seed=seed,
            mode=state.get("mode", "train"),
            weights_path=state.get("weights_path"),
            output_dir=state["output_dir"]
        ))
        for seed in config.seeds
    ]


def create_workflow():
    """
    Creates the LangGraph workflow

    Workflow Structure:
    1. Config Loader (preset or file + overrides)
    2. Seed Runner x N (parallel, one task per seed)
    3. Summary (final-window mean ± std from the CSVs)
    4. Output Formatter (config.json, summary.json)
    """
    workflow = StateGraph(RunnerState)

    workflow.add_node("config_loader", load_experiment_config)
    workflow.add_node("seed_runner", run_seed)
    workflow.add_node("summarizer", summarize_experiment)
    workflow.add_node("output_formatter", write_output_files)

    workflow.add_edge(START, "config_loader")
    workflow.add_conditional_edges("config_loader", route_seeds, ["seed_runner", END])
    workflow.add_edge("seed_runner", "summarizer")
    workflow.add_edge("summarizer", "output_formatter")
    workflow.add_edge("output_formatter", END)

    return workflow.compile()


def initial_state(config_source: str, overrides: Optional[Dict[str, Any]] = None,
                  mode: str = "train", weights_path: Optional[str] = None,
                  output_root: Optional[str] = None) -> RunnerState:
    return {
        "config_source": config_source,
        "overrides": overrides or {},
        "mode": mode,
        "weights_path": weights_path,
        "output_root": output_root,
        "config": None,
        "output_dir": None,
        "seed_results": [],
        "summary": None,
        "written_files": [],
        "workflow_status": "initialized",
        "errors": [],
        "exit_code": 0,
        "agent_trace": [],
        "timestamp": ""
    }


def run_workflow(config_source: str, overrides: Optional[Dict[str, Any]] = None,
                 mode: str = "train", weights_path: Optional[str] = None,
                 output_root: Optional[str] = None) -> Dict[str, Any]:
    """
    Run one experiment end to end

    Args:
        config_source: preset name (exp1..exp5) or path to a JSON config
        overrides: CLI overrides (epochs, bids, seeds, log_transitions, output_dir)
        mode: "train" or "evaluate"
        weights_path: saved weights, required for evaluate mode
        output_root: parent directory of the experiment output directory

    Returns:
        Final state; exit_code is 0 on success
    """
    print("=" * 70)
    print("🚀 FAIR DYNAMIC PRICING EXPERIMENT")
    print("=" * 70)
    print(f"\n📦 Config: {config_source}")
    print(f"📝 Mode: {mode}")

    app = create_workflow()
    final_state = app.invoke(initial_state(config_source, overrides, mode, weights_path, output_root))

    if final_state.get("errors"):
        print("\n⚠️  Workflow completed with errors:")
        for error in final_state["errors"]:
            print(f"   ❌ {error}")
    else:
        print("\n✅ Workflow completed successfully!")
        print(f"📄 Files written: {len(final_state.get('written_files', []))}")
        print(f"📁 Location: {final_state.get('output_dir')}")
    return final_state
