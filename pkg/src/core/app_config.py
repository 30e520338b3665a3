"""
Engine configuration and defaults
"""

import copy
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = Path(__file__).resolve().parents[2] / "engine_config.json"

DEFAULT_SETTINGS: Dict[str, Any] = {
    "series": {
        "order": 10,
        "sweep": "jacobi",
    },
    "numerics": {
        "precision": 50,
    },
    "statistics": {
        "p_max": 20,
    },
    "oracle": {
        "show_progress": False,
    },
    "output": {
        "format": "csv",
        "significant_digits": 12,
    },
    "verify": {
        "suites": ["series", "classical", "kernel", "closed-form", "hull", "statistics", "oracle"],
        "orders": 3,
    },
}


def _merge(defaults: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(defaults)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class AppConfig:
    """Central configuration manager"""

    def __init__(self, config_file: Optional[Path] = None):
        self.config_file = Path(config_file) if config_file else DEFAULT_CONFIG_FILE
        self.settings = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, falling back to the defaults"""
        if not self.config_file.exists():
            return copy.deepcopy(DEFAULT_SETTINGS)
        try:
            with open(self.config_file, "r") as f:
                config = json.load(f)
            return _merge(DEFAULT_SETTINGS, config)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Error loading config {self.config_file}: {e}")
            return copy.deepcopy(DEFAULT_SETTINGS)

    def save_config(self) -> None:
        """Save current configuration to file"""
        try:
            with open(self.config_file, "w") as f:
                json.dump(self.settings, f, indent=2)
        except OSError as e:
            logger.error(f"Error saving config {self.config_file}: {e}")

    def get(self, key: str, default: Any = None) -> Any:
        """Get a value by dotted key, e.g. ``numerics.precision``"""
        value: Any = self.settings
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any, persist: bool = False) -> None:
        keys = key.split(".")
        config = self.settings
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value
        if persist:
            self.save_config()
