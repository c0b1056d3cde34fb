"""
Base Configuration Class

Pydantic BaseSettings-based configuration plus the runtime flag that decides
whether constructors validate their invariants eagerly.
"""

from functools import lru_cache
from pathlib import Path
from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Auto-load .env file if python-dotenv is available
try:
    from dotenv import load_dotenv

    env_path = Path.cwd() / ".env"
    if env_path.exists():
        load_dotenv(env_path, override=False)
except ImportError:
    # python-dotenv not installed, skip .env loading
    pass


class ConfigBase(BaseSettings):
    """Base configuration class using Pydantic BaseSettings.

    Subclasses declare aliased fields. Values come from the environment, a
    .env file or keyword arguments; see load_config for YAML files.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,
    )

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value by dot-notation key.

        Args:
            key: Dot-notation key (e.g., "default_fuel")
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value: Any = self
        for part in key.split("."):
            if hasattr(value, part):
                value = getattr(value, part)
            elif isinstance(value, dict) and part in value:
                value = value[part]
            else:
                return default
        return value


class ThinningsSettings(ConfigBase):
    """Settings for the packed-thinnings library and CLI."""

    debug_checks: bool = Field(default=True, alias="THINNINGS_DEBUG_CHECKS")
    log_level: str = Field(default="WARNING", alias="THINNINGS_LOG_LEVEL")
    default_fuel: int = Field(default=1000, ge=0, alias="THINNINGS_DEFAULT_FUEL")
    fresh_name_base: str = Field(default="x", alias="THINNINGS_FRESH_NAME")
    bench_batches: int = Field(default=3, ge=3, alias="THINNINGS_BENCH_BATCHES")
    bench_warmup: int = Field(default=10, ge=1, alias="THINNINGS_BENCH_WARMUP")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalise and check the log level name."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("fresh_name_base")
    @classmethod
    def validate_fresh_name_base(cls, v: str) -> str:
        """Fresh names must be valid surface identifiers."""
        if not v or not v[0].isalpha() or not all(c.isalnum() or c == "_" for c in v):
            raise ValueError(f"Invalid identifier for fresh names: {v!r}")
        return v


class RuntimeFlags:
    """Mutable process-wide switches read on hot paths."""

    __slots__ = ("debug_checks",)

    def __init__(self, debug_checks: bool):
        self.debug_checks = debug_checks


@lru_cache(maxsize=1)
def get_settings() -> ThinningsSettings:
    """Return the cached settings instance."""
    return ThinningsSettings()


def reset_settings() -> None:
    """Drop cached settings and re-read the debug flag from the environment."""
    get_settings.cache_clear()
    RUNTIME.debug_checks = get_settings().debug_checks


def set_debug_checks(enabled: bool) -> None:
    """Turn eager invariant validation on or off."""
    RUNTIME.debug_checks = enabled


RUNTIME = RuntimeFlags(debug_checks=get_settings().debug_checks)
