"""
YAML Configuration File Support

Load and save settings as YAML files.
"""

import logging
import os
from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_NAME = "thinnings.yaml"


class ConfigManager:
    """Manages loading and saving configuration from YAML files."""

    def __init__(self, config_path: Optional[str] = None):
        """Initialize config manager.

        Args:
            config_path: Explicit path to config file. Defaults to
                $THINNINGS_CONFIG or ./thinnings.yaml.
        """
        if config_path:
            self.path = Path(config_path)
        else:
            self.path = Path(os.environ.get("THINNINGS_CONFIG", DEFAULT_CONFIG_NAME))
        self.config: Optional[BaseModel] = None

    def load(self, config_class: type[BaseModel]) -> BaseModel:
        """Load configuration from file.

        Args:
            config_class: Pydantic model class to load into

        Returns:
            Config instance (defaults when the file is missing or malformed)
        """
        if self.path.exists():
            try:
                with open(self.path, encoding="utf-8") as f:
                    data = yaml.safe_load(f) or {}
                if not isinstance(data, dict):
                    raise ValueError("top level must be a mapping")
                self.config = config_class(**data)
                logger.debug(f"Loaded config from {self.path}")
            except Exception as e:
                logger.warning(f"Failed to load config from {self.path}: {e}")
                self.config = config_class()
        else:
            self.config = config_class()

        return self.config

    def save(self, config: BaseModel) -> None:
        """Save configuration to file.

        Args:
            config: Config instance to save

        Raises:
            OSError: If the file cannot be written
        """
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "w", encoding="utf-8") as f:
            yaml.dump(
                config.model_dump(exclude_none=True),
                f,
                default_flow_style=False,
                sort_keys=False,
            )
        logger.debug(f"Saved config to {self.path}")


def load_config(config_class: type[BaseModel], path: Optional[str] = None) -> BaseModel:
    """Load configuration from a YAML file.

    Args:
        config_class: Pydantic model class to load into
        path: Optional path to config file

    Returns:
        Config instance
    """
    return ConfigManager(path).load(config_class)


def save_config(config: BaseModel, path: Optional[str] = None) -> None:
    """Save configuration to a YAML file.

    Args:
        config: Config instance to save
        path: Optional path to config file

    Raises:
        OSError: If the file cannot be written
    """
    ConfigManager(path).save(config)
