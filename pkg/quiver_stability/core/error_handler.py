"""Error handling system."""

import logging
import sys
import traceback
from datetime import datetime
from pathlib import Path
from typing import Dict, Optional

from .exceptions import (
    BoundExceeded, ConfigurationError, InternalAssertion, ParseError, QuiverStabilityError,
    UnknownBuiltin, ValidationError
)

LOGGER_NAME = "quiver_stability"

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

_USAGE_ERRORS = (ParseError, ValidationError, ConfigurationError, UnknownBuiltin)


def _json_safe(value):
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_json_safe(v) for v in value]
    return str(value)


def error_payload(error: Exception) -> Dict:
    """The machine-readable ``{"error": {"code", "message", "details"}}`` document."""
    if isinstance(error, QuiverStabilityError):
        details = {key: value for key, value in error.details.items() if value is not None}
        return {"error": {"code": error.error_code, "message": error.message,
                          "details": _json_safe(details)}}
    return {"error": {"code": "UNEXPECTED_ERROR", "message": str(error),
                      "details": {"type": type(error).__name__}}}


class ErrorHandler:
    """Handles errors, logging, and the machine-readable error payload."""

    def __init__(self, log_dir: Optional[Path] = None, console_level: str = "WARNING"):
        """Initialize error handler.

        Args:
            log_dir: Directory for log files
            console_level: Level of the stderr handler
        """
        self.logger = logging.getLogger(LOGGER_NAME)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        # Remove existing handlers to avoid duplicates if re-initialized
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()

        if not log_dir:
            log_dir = Path.home() / ".quiver_stability" / "logs"

        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)

        # File handler
        log_file = self.log_dir / f"run_{datetime.now().strftime('%Y%m%d')}.log"
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        ))
        self.logger.addHandler(file_handler)

        # Console handler; stdout carries the JSON document
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(getattr(logging, console_level.upper(), logging.WARNING))
        console_handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        self.logger.addHandler(console_handler)

    def handle_error(self, error: Exception, context: str = "") -> Dict:
        """Log an error and return its ``{"error": {...}}`` payload.

        Args:
            error: The exception to handle
            context: Subcommand or step where the error occurred

        Returns:
            dict: Payload with ``code``, ``message`` and ``details``
        """
        self.logger.error(f"Error in {context}: {error}")
        self.logger.debug(traceback.format_exc())

        if isinstance(error, QuiverStabilityError):
            return self._format_app_error(error)
        return self._format_unexpected_error(error)

    def _format_app_error(self, error: QuiverStabilityError) -> Dict:
        if isinstance(error, InternalAssertion):
            self.logger.critical(f"Internal consistency check failed: {error.message}")
        elif isinstance(error, BoundExceeded):
            self.logger.info("Raise brute_force_bound in the configuration to go further")
        return error_payload(error)

    def _format_unexpected_error(self, error: Exception) -> Dict:
        self.logger.critical(f"Unexpected {type(error).__name__}: {error}")
        return error_payload(error)

    @staticmethod
    def exit_status(error: Exception) -> int:
        """2 for malformed input, 1 for every other failure."""
        if isinstance(error, _USAGE_ERRORS):
            return EXIT_USAGE_ERROR
        return EXIT_DOMAIN_ERROR

    def log_info(self, message: str):
        self.logger.info(message)

    def log_warning(self, message: str):
        self.logger.warning(message)
