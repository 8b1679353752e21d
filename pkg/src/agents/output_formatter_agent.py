"""
Output Formatter Agent
Writes the resolved config and the experiment summary as JSON files
"""
import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict

from src.config import CONFIG_OUTPUT_FILE, SUMMARY_OUTPUT_FILE
from src.models.state_model import RunnerState


def write_output_files(state: RunnerState) -> Dict[str, Any]:
    """
    Output Formatter Agent

    Reads: config, summary, output_dir from state
    Writes: files to disk, written_files, workflow_status, agent_trace
    """
    print("\n💾 Output Formatter Agent: Starting...")

    config = state.get("config")
    summary = state.get("summary")
    output_dir = Path(state["output_dir"])
    written_files = []
    errors = []

    documents = [
        (CONFIG_OUTPUT_FILE, config.model_dump(mode="json") if config else None),
        (SUMMARY_OUTPUT_FILE, summary.model_dump(mode="json") if summary else None),
    ]
    for file_name, document in documents:
        if document is None:
            print(f"  ⚠️  Skipped: {file_name} (no data)")
            continue
        path = output_dir / file_name
        try:
            output_dir.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(document, f, indent=2, ensure_ascii=False)
            written_files.append(str(path))
            print(f"  ✅ Written: {file_name}")
        except OSError as e:
            error_msg = f"Failed to write {file_name}: {e} [{path}]"
            errors.append(error_msg)
            print(f"  ❌ Error: {error_msg}")

    print(f"📂 Location: {output_dir}")
    result = {
        "written_files": written_files,
        "workflow_status": "complete" if summary and not errors else "error",
        "agent_trace": ["output_formatter_agent"],
        "timestamp": datetime.now().isoformat()
    }
    if errors:
        result["errors"] = errors
        result["exit_code"] = 3
    return result


# Agent metadata
AGENT_INFO = {
    "name": "Output Formatter Agent",
    "responsibility": "Write config.json and summary.json",
    "reads_from_state": ["config", "summary", "output_dir"],
    "writes_to_state": ["written_files", "workflow_status", "agent_trace"],
    "dependencies": ["summary_agent"]
}
