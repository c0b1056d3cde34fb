"""
Configuration Management

Type-safe settings with environment and YAML loading, plus benchmark presets.
"""

from packed_thinnings.config.base import (
    RUNTIME,
    ConfigBase,
    ThinningsSettings,
    get_settings,
    reset_settings,
    set_debug_checks,
)
from packed_thinnings.config.presets import PresetManager, get_preset, list_presets
from packed_thinnings.config.yaml import ConfigManager, load_config, save_config

__all__ = [
    "ConfigBase",
    "ThinningsSettings",
    "RUNTIME",
    "get_settings",
    "reset_settings",
    "set_debug_checks",
    "ConfigManager",
    "load_config",
    "save_config",
    "PresetManager",
    "get_preset",
    "list_presets",
]
