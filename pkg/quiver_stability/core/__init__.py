"""Core functionality: errors, logging and request validation.

``ApplicationController`` lives in ``core.application_controller``; it pulls
in every engine, so it is not imported here.
"""

from .error_handler import ErrorHandler, error_payload
from .exceptions import QuiverStabilityError
from .validation import InputValidator, ValidationResult

__all__ = [
    "ErrorHandler",
    "InputValidator",
    "QuiverStabilityError",
    "ValidationResult",
    "error_payload",
]
