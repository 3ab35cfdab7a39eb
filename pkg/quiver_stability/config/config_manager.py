"""Configuration management for quiver stability runs."""

import json
import logging
from dataclasses import dataclass, asdict, fields
from pathlib import Path
from typing import Optional, Dict, Any

from ..repcore.field import is_prime
from ..repcore.limits import Limits
from .exceptions import ConfigLoadError, ConfigSaveError, ConfigValidationError

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


@dataclass
class AppConfig:
    """Engine and output settings."""

    # Field
    prime: int = 2

    # Enumeration limits
    brute_force_bound: int = 6
    hom_enumeration_limit: int = 2 ** 20
    oracle_max_indecomposables: int = 15

    # Randomized checks
    seed: int = 0
    random_theta_samples: int = 1000
    verify_uniqueness: bool = True

    # Execution
    max_workers: int = 2

    # Logging
    log_dir: str = ""
    log_level: str = "WARNING"

    # Rendering
    svg_size: int = 480
    decimal_places: int = 6

    def validate(self) -> bool:
        """Validate configuration values."""
        if not is_prime(self.prime):
            raise ConfigValidationError(f"Field characteristic must be prime: {self.prime}",
                                        config_key="prime", config_value=self.prime)

        if self.brute_force_bound < 0:
            raise ConfigValidationError("Brute-force bound must be non-negative",
                                        config_key="brute_force_bound",
                                        config_value=self.brute_force_bound)

        if self.hom_enumeration_limit < 1:
            raise ConfigValidationError("Hom enumeration limit must be at least 1",
                                        config_key="hom_enumeration_limit",
                                        config_value=self.hom_enumeration_limit)

        if not (1 <= self.oracle_max_indecomposables <= 24):
            raise ConfigValidationError(
                f"Oracle cap must be 1-24: {self.oracle_max_indecomposables}",
                config_key="oracle_max_indecomposables",
                config_value=self.oracle_max_indecomposables)

        if self.seed < 0:
            raise ConfigValidationError("Seed must be non-negative",
                                        config_key="seed", config_value=self.seed)

        if self.random_theta_samples < 0:
            raise ConfigValidationError("Sample count must be non-negative",
                                        config_key="random_theta_samples",
                                        config_value=self.random_theta_samples)

        if self.max_workers < 1:
            raise ConfigValidationError("Max workers must be at least 1",
                                        config_key="max_workers", config_value=self.max_workers)

        if self.log_level not in VALID_LOG_LEVELS:
            raise ConfigValidationError(f"Invalid log level: {self.log_level}",
                                        config_key="log_level", config_value=self.log_level)

        if self.svg_size < 64:
            raise ConfigValidationError("SVG size must be at least 64",
                                        config_key="svg_size", config_value=self.svg_size)

        if not (0 <= self.decimal_places <= 12):
            raise ConfigValidationError(f"Decimal places must be 0-12: {self.decimal_places}",
                                        config_key="decimal_places",
                                        config_value=self.decimal_places)

        return True

    def to_limits(self) -> Limits:
        """Engine-facing enumeration limits."""
        return Limits(
            brute_force_bound=self.brute_force_bound,
            hom_enumeration_limit=self.hom_enumeration_limit,
            oracle_max_indecomposables=self.oracle_max_indecomposables,
            verify_uniqueness=self.verify_uniqueness,
        )


class ConfigurationManager:
    """Manages engine configuration with JSON persistence."""

    def __init__(self, config_dir: Optional[Path] = None):
        """Initialize configuration manager.

        Args:
            config_dir: Custom configuration directory. If None, uses
                ``~/.quiver_stability``.
        """
        self.logger = logging.getLogger(__name__)

        if config_dir:
            self.config_dir = Path(config_dir)
        else:
            self.config_dir = Path.home() / ".quiver_stability"

        self.config_file = self.config_dir / "config.json"
        self.default_config_file = Path(__file__).parent.parent.parent / "config" / "default_config.json"

        self._config: Optional[AppConfig] = None

    def load_config(self, persist_defaults: bool = True) -> AppConfig:
        """Load configuration from file or fall back to defaults.

        Args:
            persist_defaults: Write the defaults to ``config.json`` when no
                file exists yet.

        Raises:
            ConfigLoadError: If the configuration file is unreadable
        """
        if not self.config_file.exists():
            self.logger.info("No config file found, using default configuration")
            config = self.get_default_config()
            if persist_defaults:
                self.save_config(config)
            self._config = config
            return config

        try:
            self.logger.info(f"Loading config from {self.config_file}")
            with open(self.config_file, 'r', encoding='utf-8') as f:
                config_data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigLoadError(f"Invalid JSON in config file: {str(e)}",
                                  config_file=str(self.config_file))
        except OSError as e:
            raise ConfigLoadError(f"Failed to load configuration: {str(e)}",
                                  config_file=str(self.config_file))

        config = self._dict_to_config(config_data)
        try:
            config.validate()
        except ConfigValidationError as e:
            self.logger.warning(f"Config validation failed: {str(e)}, using defaults")
            config = self.get_default_config()

        self._config = config
        return config

    def save_config(self, config: AppConfig) -> None:
        """Save configuration to file.

        Raises:
            ConfigSaveError: If configuration cannot be saved
        """
        try:
            config.validate()
        except ConfigValidationError as e:
            raise ConfigSaveError(f"Configuration validation failed: {str(e)}",
                                  config_file=str(self.config_file))

        try:
            self.config_dir.mkdir(parents=True, exist_ok=True)
            self.logger.info(f"Saving config to {self.config_file}")
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(asdict(config), f, indent=2, sort_keys=True)
        except OSError as e:
            raise ConfigSaveError(f"Failed to save configuration: {str(e)}",
                                  config_file=str(self.config_file))

        self._config = config

    def get_default_config(self) -> AppConfig:
        """Defaults from ``config/default_config.json``, else dataclass defaults."""
        try:
            if self.default_config_file.exists():
                with open(self.default_config_file, 'r', encoding='utf-8') as f:
                    return self._dict_to_config(json.load(f))
            return AppConfig()
        except (OSError, json.JSONDecodeError, TypeError) as e:
            self.logger.warning(f"Failed to load default config file: {str(e)}, using hardcoded defaults")
            return AppConfig()

    def reset_to_defaults(self) -> AppConfig:
        config = self.get_default_config()
        self.save_config(config)
        return config

    def get_config(self) -> AppConfig:
        if self._config is None:
            return self.load_config()
        return self._config

    def update_config(self, **kwargs) -> AppConfig:
        """Update specific configuration values and persist them."""
        config = self.get_config()
        valid_fields = {f.name for f in fields(AppConfig)}

        for key in kwargs:
            if key not in valid_fields:
                raise ConfigValidationError(f"Unknown configuration key: {key}",
                                            config_key=key)

        updated = AppConfig(**{**asdict(config), **kwargs})
        self.save_config(updated)
        return updated

    def _dict_to_config(self, config_dict: Dict[str, Any]) -> AppConfig:
        valid_fields = {f.name for f in fields(AppConfig)}
        filtered_dict = {k: v for k, v in config_dict.items() if k in valid_fields}
        return AppConfig(**filtered_dict)
