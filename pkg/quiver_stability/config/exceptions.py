"""Exceptions raised while loading, saving or checking engine settings."""

from ..core.exceptions import ConfigurationError


class ConfigLoadError(ConfigurationError):
    """A settings file exists but cannot be read or decoded."""

    def __init__(self, message: str, config_file: str = None):
        super().__init__(message, config_key="config_file", config_value=config_file)
        self.config_file = config_file


class ConfigSaveError(ConfigurationError):
    """Settings could not be written to the configuration directory."""

    def __init__(self, message: str, config_file: str = None):
        super().__init__(message, config_key="config_file", config_value=config_file)
        self.config_file = config_file


class ConfigValidationError(ConfigurationError):
    """A setting is outside its permitted range."""
