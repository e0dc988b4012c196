"""
cuntzlab Configuration Module

WHAT: Central configuration for enumeration bounds, sampling and data paths
WHY: Abstraction layer for paths and limits, no hard-coded values in calculators
ARCHITECTURE: Configuration layer for all cuntzlab components

Settings are resolved in this order (first wins):
    1. Environment variables (CUNTZLAB_BOUND, CUNTZLAB_K_TEST, CUNTZLAB_GRID,
       CUNTZLAB_SEED), including values from a .env file
    2. ~/.config/cuntzlab/settings.yaml (or $CUNTZLAB_CONFIG_DIR/settings.yaml)
    3. Built-in defaults from LabSettings

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import os
import warnings
from pathlib import Path

import yaml
from dotenv import load_dotenv

from src.models.settings_inputs import LabSettings

load_dotenv()

# env var -> LabSettings field
ENV_OVERRIDES: dict[str, str] = {
    "CUNTZLAB_BOUND": "enumeration_bound",
    "CUNTZLAB_K_TEST": "softness_k_test",
    "CUNTZLAB_GRID": "sample_denominator",
    "CUNTZLAB_SEED": "sample_seed",
}


class CuntzLabConfig:
    """
    Central configuration for cuntzlab.

    Provides data paths and validated LabSettings with safe fallbacks.
    """

    PROJECT_ROOT = Path(__file__).parent.parent
    DATA_DIR = PROJECT_ROOT / "data"
    STRUCTURES_DIR = DATA_DIR / "structures"
    GOLDEN_FILE = DATA_DIR / "repro" / "golden.yaml"

    @classmethod
    def config_dir(cls) -> Path:
        """Directory holding settings.yaml (overridable for tests and CI)."""
        return Path(os.getenv("CUNTZLAB_CONFIG_DIR", Path.home() / ".config" / "cuntzlab"))

    @classmethod
    def settings_file(cls) -> Path:
        return cls.config_dir() / "settings.yaml"

    @classmethod
    def load_file_settings(cls) -> dict[str, object]:
        """
        Read settings.yaml with safe fallback to an empty mapping.

        Returns:
            Raw key/value pairs from the YAML file, restricted to known fields

        EDUCATIONAL NOTE:
        A broken settings file must never stop a computation; we warn and
        continue with defaults so the CLI stays usable.
        """
        path = cls.settings_file()
        if not path.exists():
            return {}

        try:
            with open(path, encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            warnings.warn(f"Ignoring unreadable settings file {path}: {e}")
            return {}

        if not isinstance(data, dict):
            warnings.warn(f"Ignoring settings file {path}: expected a mapping")
            return {}

        known = set(LabSettings.model_fields)
        unknown = sorted(str(key) for key in data if key not in known)
        if unknown:
            warnings.warn(f"Unknown settings ignored: {', '.join(unknown)}")
        return {key: value for key, value in data.items() if key in known}

    @classmethod
    def load_settings(cls) -> LabSettings:
        """
        Resolve LabSettings from environment, YAML file and defaults.

        Raises:
            ValueError: If an environment override is not a valid integer or
                violates a LabSettings bound (pydantic ValidationError)
        """
        values = cls.load_file_settings()
        try:
            settings = LabSettings(**values)
        except ValueError as e:
            warnings.warn(f"Invalid settings file values, using defaults: {e}")
            settings = LabSettings()

        overrides: dict[str, object] = {}
        for env_name, field_name in ENV_OVERRIDES.items():
            raw = os.getenv(env_name)
            if raw is None or raw.strip() == "":
                continue
            try:
                overrides[field_name] = int(raw.strip().replace("_", ""))
            except ValueError:
                raise ValueError(f"{env_name} must be an integer, got {raw!r}") from None

        if not overrides:
            return settings
        return LabSettings(**{**settings.model_dump(), **overrides})
