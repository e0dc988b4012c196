"""
Tests for settings resolution in src/config.py.

Test Categories:
1. Default Tests - Built-in LabSettings values and data paths
2. File Tests - settings.yaml loading and safe fallbacks
3. Environment Tests - CUNTZLAB_* overrides and their validation
"""

import pytest
from pydantic import ValidationError

from src.config import ENV_OVERRIDES, CuntzLabConfig
from src.models.settings_inputs import LabSettings


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """Point the config directory at an empty temp dir and clear overrides."""
    for env_name in ENV_OVERRIDES:
        monkeypatch.delenv(env_name, raising=False)
    monkeypatch.setenv("CUNTZLAB_CONFIG_DIR", str(tmp_path))
    return tmp_path


class TestDefaults:
    """Behaviour without a settings file or overrides."""

    def test_defaults(self):
        """No file and no env vars gives the built-in defaults."""
        settings = CuntzLabConfig.load_settings()

        assert settings == LabSettings()
        assert settings.enumeration_bound == 20_000
        assert settings.falsifier_bound == 3

    def test_data_paths(self):
        """Data paths hang off the project root."""
        assert CuntzLabConfig.GOLDEN_FILE.exists()
        assert CuntzLabConfig.STRUCTURES_DIR.is_dir()

    def test_config_dir_override(self, isolated_config):
        """CUNTZLAB_CONFIG_DIR relocates settings.yaml."""
        assert CuntzLabConfig.settings_file() == isolated_config / "settings.yaml"


class TestSettingsFile:
    """settings.yaml with safe fallback."""

    def test_file_values_are_used(self, isolated_config):
        """Known keys are read from the file."""
        (isolated_config / "settings.yaml").write_text("enumeration_bound: 500\nsample_seed: 7\n")

        settings = CuntzLabConfig.load_settings()

        assert settings.enumeration_bound == 500
        assert settings.sample_seed == 7

    def test_unknown_keys_warn(self, isolated_config):
        """Unknown keys are ignored with a warning."""
        (isolated_config / "settings.yaml").write_text("enumeration_bound: 500\ncolour: blue\n")

        with pytest.warns(UserWarning, match="Unknown settings ignored: colour"):
            settings = CuntzLabConfig.load_settings()

        assert settings.enumeration_bound == 500

    def test_non_mapping_warns(self, isolated_config):
        """A YAML list is not a settings file."""
        (isolated_config / "settings.yaml").write_text("- 1\n- 2\n")

        with pytest.warns(UserWarning, match="expected a mapping"):
            assert CuntzLabConfig.load_file_settings() == {}

    def test_broken_yaml_warns(self, isolated_config):
        """Unparseable YAML falls back to defaults."""
        (isolated_config / "settings.yaml").write_text("enumeration_bound: [1, 2\n")

        with pytest.warns(UserWarning, match="unreadable"):
            settings = CuntzLabConfig.load_settings()

        assert settings == LabSettings()

    def test_invalid_values_warn(self, isolated_config):
        """Out-of-range file values fall back to defaults."""
        (isolated_config / "settings.yaml").write_text("falsifier_bound: 9\n")

        with pytest.warns(UserWarning, match="using defaults"):
            settings = CuntzLabConfig.load_settings()

        assert settings.falsifier_bound == 3


class TestEnvironmentOverrides:
    """CUNTZLAB_* environment variables."""

    def test_env_beats_file(self, isolated_config, monkeypatch):
        """Environment values win over the settings file."""
        # Given
        (isolated_config / "settings.yaml").write_text("enumeration_bound: 500\n")
        monkeypatch.setenv("CUNTZLAB_BOUND", "1_000")

        # When
        settings = CuntzLabConfig.load_settings()

        # Then
        assert settings.enumeration_bound == 1000

    @pytest.mark.parametrize(
        "env_name,field_name,raw,expected",
        [
            ("CUNTZLAB_K_TEST", "softness_k_test", "32", 32),
            ("CUNTZLAB_GRID", "sample_denominator", " 12 ", 12),
            ("CUNTZLAB_SEED", "sample_seed", "99", 99),
        ],
    )
    def test_each_override(self, monkeypatch, env_name, field_name, raw, expected):
        """Every override maps onto its LabSettings field."""
        monkeypatch.setenv(env_name, raw)

        assert getattr(CuntzLabConfig.load_settings(), field_name) == expected

    def test_blank_value_is_ignored(self, monkeypatch):
        """An empty variable means no override."""
        monkeypatch.setenv("CUNTZLAB_BOUND", "  ")

        assert CuntzLabConfig.load_settings().enumeration_bound == 20_000

    def test_non_integer_raises(self, monkeypatch):
        """Overrides must be integers."""
        monkeypatch.setenv("CUNTZLAB_SEED", "abc")

        with pytest.raises(ValueError, match="CUNTZLAB_SEED must be an integer"):
            CuntzLabConfig.load_settings()

    def test_out_of_range_raises(self, monkeypatch):
        """Overrides are validated by LabSettings."""
        monkeypatch.setenv("CUNTZLAB_K_TEST", "5000")

        with pytest.raises(ValidationError):
            CuntzLabConfig.load_settings()
