"""
Newline-delimited JSON log with one TransitionRecord per bid
"""
from pathlib import Path
from typing import Iterable, List, Union

from src.errors import OutputError
from src.models.stats_model import TransitionRecord


def write_transition_log(records: Iterable[TransitionRecord], path: Union[str, Path],
                         append: bool = True) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "a" if append else "w", encoding="utf-8") as f:
            for record in records:
                f.write(record.model_dump_json())
                f.write("\n")
    except OSError as e:
        raise OutputError(f"failed to write transition log: {e}", path=str(path)) from e
    return path


def read_transition_log(path: Union[str, Path]) -> List[TransitionRecord]:
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return [TransitionRecord.model_validate_json(line) for line in f if line.strip()]
    except OSError as e:
        raise OutputError(f"failed to read transition log: {e}", path=str(path)) from e
