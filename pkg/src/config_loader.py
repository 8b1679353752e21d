"""
Experiment config loading: presets or JSON files, CLI overrides, validation
"""
import copy
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from src.errors import ConfigError
from src.models.experiment_model import ExperimentConfig
from src.presets import PRESETS

logger = logging.getLogger(__name__)

# CLI override key -> path inside the config document
OVERRIDE_PATHS = {
    "epochs": ("agent", "epochs"),
    "bids": ("agent", "bids_per_epoch"),
    "log_transitions": ("agent", "log_transitions"),
    "seeds": ("seeds",),
    "output_dir": ("output_dir",),
}


def list_presets() -> List[str]:
    return sorted(PRESETS)


def _read_document(source: str) -> Dict[str, Any]:
    if source in PRESETS:
        return copy.deepcopy(PRESETS[source])
    path = Path(source)
    if not path.exists():
        raise ConfigError(f"no preset or config file named '{source}'", field="config")
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}",
                          field=str(path)) from e
    except OSError as e:
        raise ConfigError(f"cannot read config file: {e}", field=str(path)) from e
    if not isinstance(document, dict):
        raise ConfigError("config file must hold a JSON object", field=str(path))
    return document


def apply_overrides(document: Dict[str, Any], overrides: Optional[Dict[str, Any]]) -> Dict[str, Any]:
    """Set CLI overrides into the raw document; None values are ignored"""
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in OVERRIDE_PATHS:
            raise ConfigError(f"unknown override '{key}'", field=key)
        *parents, leaf = OVERRIDE_PATHS[key]
        node = document
        for parent in parents:
            node = node.setdefault(parent, {})
        node[leaf] = value
    return document


def load_config(source: str, overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    Resolve a preset name or JSON path into a validated ExperimentConfig.
    Validation failures name the offending field.
    """
    document = apply_overrides(_read_document(source), overrides)
    try:
        config = ExperimentConfig.model_validate(document)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "config"
        raise ConfigError(first["msg"], field=field) from e
    logger.debug("Loaded config %s from %s", config.name, source)
    return config
