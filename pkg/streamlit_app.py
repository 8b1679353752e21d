"""
Streamlit UI for the fair dynamic pricing simulator

Two input modes:
1. Preset Mode: pick one of the built-in experiments and shrink it if needed
2. JSON Mode: paste a full experiment config

After a run the emitted metrics CSVs are charted per seed.
"""
import sys
import tempfile
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent))

import json

import pandas as pd
import streamlit as st
from dotenv import load_dotenv

from src.config import resolve_output_root
from src.config_loader import list_presets
from src.orchestrator import run_workflow
from src.presets import PRESETS
from src.reporting.csv_writer import read_csv

# Load environment variables
load_dotenv()

CHART_COLUMNS = {
    "Average cumulative bid": "run_avg_cum_bid",
    "Average fairness": "run_avg_fairness",
    "Reject ratio": "reject_ratio",
    "Mean scaled reward": "mean_reward_scaled",
    "Visit-count metric": "lr_metric",
    "Learning rate (1/C)": "lr_step",
}

# Page config
st.set_page_config(
    page_title="Fair Dynamic Pricing",
    page_icon="💶",
    layout="wide",
    initial_sidebar_state="expanded"
)


def initialize_session_state():
    """Initialize session state variables"""
    if 'final_state' not in st.session_state:
        st.session_state.final_state = None


def render_run_controls():
    """Shared overrides for epochs, bids and seeds"""
    col1, col2, col3 = st.columns(3)
    with col1:
        epochs = st.number_input("Epochs", min_value=1, value=50, step=10)
    with col2:
        bids = st.number_input("Bids per epoch", min_value=1, value=200, step=100)
    with col3:
        n_seeds = st.number_input("Seeds", min_value=1, max_value=10, value=1)
    return {"epochs": int(epochs), "bids": int(bids), "seeds": list(range(int(n_seeds)))}


def render_preset_mode():
    """Pick a built-in experiment"""
    st.markdown("### 📋 Built-in experiment")
    name = st.selectbox(
        "Experiment",
        list_presets(),
        format_func=lambda n: f"{n}: {PRESETS[n]['description']}"
    )
    overrides = render_run_controls()
    if st.button("🚀 Run experiment", type="primary"):
        execute(name, overrides)


def render_json_mode():
    """Paste a config document"""
    st.markdown("### 📝 Experiment config (JSON)")
    example = json.dumps(PRESETS["exp3"], indent=2)
    with st.expander("📖 View Example JSON Format"):
        st.code(example, language="json")
    text = st.text_area("Config", value=example, height=300)
    overrides = render_run_controls()
    if st.button("🚀 Run experiment", type="primary"):
        try:
            json.loads(text)
        except json.JSONDecodeError as e:
            st.error(f"❌ Invalid JSON: {e}")
            return
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write(text)
        try:
            execute(f.name, overrides)
        finally:
            Path(f.name).unlink(missing_ok=True)


def execute(source, overrides):
    with st.spinner("Running Q-learning..."):
        st.session_state.final_state = run_workflow(
            source,
            overrides=overrides,
            output_root=str(resolve_output_root())
        )


def render_results():
    final_state = st.session_state.final_state
    if final_state is None:
        return
    if final_state.get("errors"):
        for error in final_state["errors"]:
            st.error(f"❌ {error}")
        return

    summary = final_state["summary"]
    st.markdown(f"### 📊 Results: {summary.name}")
    cols = st.columns(4)
    labels = [("cum_bid", "Cumulative bid"), ("mean_fairness", "Fairness"),
              ("reject_ratio", "Reject ratio"), ("expected_revenue", "Expected revenue")]
    for col, (key, label) in zip(cols, labels):
        stat = summary.metrics[key]
        col.metric(label, f"{stat.mean:.3f}", f"± {stat.std:.3f}", delta_color="off")

    frames = {
        artifact.seed: read_csv(artifact.csv_path)
        for artifact in sorted(final_state["seed_results"], key=lambda a: a.seed)
    }
    tabs = st.tabs(list(CHART_COLUMNS))
    for tab, (label, column) in zip(tabs, CHART_COLUMNS.items()):
        with tab:
            chart = pd.DataFrame({f"seed {seed}": frame[column] for seed, frame in frames.items()})
            st.line_chart(chart)

    group_cols = [c for c in next(iter(frames.values())).columns if c.startswith("g") and c.endswith("_mean")]
    st.markdown("#### Average bid per group (final window)")
    st.dataframe(pd.DataFrame(
        {c: [summary.metrics[c].mean] for c in group_cols if c in summary.metrics}
    ))
    with st.expander("🔧 Workflow trace"):
        for i, node in enumerate(final_state.get("agent_trace", []), 1):
            st.text(f"{i}. {node}")
    st.caption(f"📁 {final_state.get('output_dir')}")


def main():
    initialize_session_state()
    st.title("💶 Fair Dynamic Pricing")
    st.caption("Epsilon-greedy Q-learning balancing revenue against group fairness")

    with st.sidebar:
        mode = st.radio("Input mode", ["Preset", "JSON"])

    if mode == "Preset":
        render_preset_mode()
    else:
        render_json_mode()
    render_results()


if __name__ == "__main__":
    main()
