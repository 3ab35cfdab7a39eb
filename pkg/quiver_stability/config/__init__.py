"""Configuration management module."""

from .config_manager import ConfigurationManager, AppConfig
from .exceptions import ConfigLoadError, ConfigSaveError, ConfigValidationError

__all__ = [
    "ConfigurationManager",
    "AppConfig",
    "ConfigLoadError",
    "ConfigSaveError",
    "ConfigValidationError",
]
