"""Tests for configuration system."""

import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from packed_thinnings.config import (
    RUNTIME,
    ConfigManager,
    PresetManager,
    ThinningsSettings,
    get_preset,
    get_settings,
    list_presets,
    load_config,
    save_config,
    set_debug_checks,
)


class TestThinningsSettings:
    """Settings defaults, environment and validators."""

    def test_defaults(self):
        """Defaults match the documented values."""
        with patch.dict(os.environ, {}, clear=True):
            settings = ThinningsSettings(_env_file=None)
        assert settings.debug_checks is True
        assert settings.log_level == "WARNING"
        assert settings.default_fuel == 1000
        assert settings.fresh_name_base == "x"
        assert settings.bench_batches == 3

    def test_from_env(self):
        """Aliased environment variables override defaults."""
        env = {
            "THINNINGS_DEBUG_CHECKS": "false",
            "THINNINGS_LOG_LEVEL": "debug",
            "THINNINGS_DEFAULT_FUEL": "42",
            "THINNINGS_FRESH_NAME": "v",
        }
        with patch.dict(os.environ, env):
            settings = ThinningsSettings()
        assert settings.debug_checks is False
        assert settings.log_level == "DEBUG"
        assert settings.default_fuel == 42
        assert settings.fresh_name_base == "v"

    @pytest.mark.parametrize(
        "field,value",
        [
            ("log_level", "LOUD"),
            ("fresh_name_base", "1x"),
            ("fresh_name_base", ""),
            ("default_fuel", -1),
            ("bench_batches", 2),
        ],
    )
    def test_validation(self, field, value):
        """Bad values are rejected."""
        with pytest.raises(ValidationError):
            ThinningsSettings(**{field: value})

    def test_get_dot_notation(self):
        """Dot-notation reads, with a default for unknown keys."""
        settings = ThinningsSettings(default_fuel=7)
        assert settings.get("default_fuel") == 7
        assert settings.get("nonexistent", "default") == "default"
        assert settings.get("default_fuel.deeper") is None

    def test_cached_settings(self, fresh_settings):
        """get_settings is cached until reset."""
        assert get_settings() is get_settings()
        fresh_settings.setenv("THINNINGS_DEFAULT_FUEL", "5")
        assert get_settings().default_fuel != 5
        get_settings.cache_clear()
        assert get_settings().default_fuel == 5

    def test_debug_flag(self):
        """set_debug_checks flips the runtime flag."""
        set_debug_checks(False)
        assert RUNTIME.debug_checks is False
        set_debug_checks(True)
        assert RUNTIME.debug_checks is True


class TestConfigManager:
    """YAML files."""

    def test_save_and_load(self, tmp_path):
        """Values survive a round trip through YAML."""
        path = tmp_path / "thinnings.yaml"
        save_config(ThinningsSettings(default_fuel=77, log_level="INFO"), str(path))
        assert path.exists()
        loaded = load_config(ThinningsSettings, str(path))
        assert loaded.default_fuel == 77
        assert loaded.log_level == "INFO"

    def test_missing_file_gives_defaults(self, tmp_path):
        """A path that does not exist loads defaults."""
        loaded = load_config(ThinningsSettings, str(tmp_path / "absent.yaml"))
        assert isinstance(loaded, ThinningsSettings)

    @pytest.mark.parametrize("content", ["- just\n- a list\n", "default_fuel: -5\n", ": :\n"])
    def test_bad_file_gives_defaults(self, tmp_path, content):
        """Malformed or invalid files fall back to defaults with a warning."""
        path = tmp_path / "bad.yaml"
        path.write_text(content)
        loaded = load_config(ThinningsSettings, str(path))
        assert loaded.default_fuel >= 0

    def test_env_path(self, tmp_path, monkeypatch):
        """THINNINGS_CONFIG names the default file."""
        path = tmp_path / "from_env.yaml"
        path.write_text("default_fuel: 12\n")
        monkeypatch.setenv("THINNINGS_CONFIG", str(path))
        manager = ConfigManager()
        assert manager.path == path
        assert manager.load(ThinningsSettings).default_fuel == 12

    def test_save_unwritable_raises(self, tmp_path):
        """Write failures surface as OSError."""
        blocker = tmp_path / "file"
        blocker.write_text("")
        with pytest.raises(OSError):
            save_config(ThinningsSettings(), str(blocker / "thinnings.yaml"))


class TestPresets:
    """Benchmark presets."""

    def test_get_preset(self):
        """Presets carry every bench parameter."""
        preset = get_preset("acceptance")
        assert preset["widths"] == [64, 1024, 4096]
        assert set(preset) == {"widths", "ops", "iters", "seed", "density"}

    def test_get_preset_invalid(self):
        """Unknown presets are named in the error."""
        with pytest.raises(ValueError, match="Unknown preset"):
            get_preset("invalid_preset")

    def test_list_presets(self):
        """Every preset has a description."""
        presets = list_presets()
        assert {"quick", "acceptance", "full", "stress"} <= set(presets)

    def test_presets_are_copies(self):
        """Editing a returned preset does not change the stored one."""
        get_preset("quick")["iters"] = 0
        assert get_preset("quick")["iters"] == 200

    def test_manager_lists_every_preset(self):
        """A fresh manager describes exactly the built-in presets."""
        manager = PresetManager()
        assert set(manager.list_presets()) == {"quick", "acceptance", "full", "stress"}
        assert manager.list_presets()["acceptance"].startswith("join/compose/kept")
