"""Input validation for command requests."""

import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .exceptions import ValidationError


class ValidationSeverity(Enum):
    """Severity level of validation issues."""
    ERROR = "error"      # Prevents the run
    WARNING = "warning"  # May affect results
    INFO = "info"        # Informational only


@dataclass
class ValidationIssue:
    """Represents a single validation issue."""
    severity: ValidationSeverity
    message: str
    file_path: Optional[str] = None
    field: Optional[str] = None
    suggestion: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'severity': self.severity.value,
            'message': self.message,
            'file_path': self.file_path,
            'field': self.field,
            'suggestion': self.suggestion
        }


@dataclass
class ValidationResult:
    """Result of validation."""
    is_valid: bool = True
    issues: List[ValidationIssue] = field(default_factory=list)

    def _add(self, severity: ValidationSeverity, message: str, file_path: Optional[str],
             field: Optional[str], suggestion: Optional[str]):
        self.issues.append(ValidationIssue(severity, message, file_path, field, suggestion))

    def add_error(self, message: str, file_path: Optional[str] = None,
                  field: Optional[str] = None, suggestion: Optional[str] = None):
        """Add an error issue."""
        self._add(ValidationSeverity.ERROR, message, file_path, field, suggestion)
        self.is_valid = False

    def add_warning(self, message: str, file_path: Optional[str] = None,
                    field: Optional[str] = None, suggestion: Optional[str] = None):
        self._add(ValidationSeverity.WARNING, message, file_path, field, suggestion)

    def add_info(self, message: str, file_path: Optional[str] = None,
                 field: Optional[str] = None, suggestion: Optional[str] = None):
        self._add(ValidationSeverity.INFO, message, file_path, field, suggestion)

    def merge(self, other: "ValidationResult"):
        """Merge another validation result into this one."""
        self.issues.extend(other.issues)
        if not other.is_valid:
            self.is_valid = False

    @property
    def errors(self) -> List[ValidationIssue]:
        return [i for i in self.issues if i.severity == ValidationSeverity.ERROR]

    @property
    def warnings(self) -> List[ValidationIssue]:
        return [i for i in self.issues if i.severity == ValidationSeverity.WARNING]

    def get_summary(self) -> str:
        """Get a summary of validation issues."""
        error_count = len(self.errors)
        warning_count = len(self.warnings)

        if error_count == 0 and warning_count == 0:
            return "Validation passed"
        elif error_count > 0:
            return f"Validation failed: {error_count} error(s), {warning_count} warning(s)"
        else:
            return f"Validation passed with {warning_count} warning(s)"

    def to_dict(self) -> Dict[str, Any]:
        return {"valid": self.is_valid, "summary": self.get_summary(),
                "issues": [issue.to_dict() for issue in self.issues]}

    def raise_for_errors(self):
        """Raise ``ValidationError`` naming the first error, if any."""
        if self.is_valid:
            return
        first = self.errors[0]
        raise ValidationError(f"{self.get_summary()}: {first.message}", field=first.field,
                              value=first.file_path)


SUBCOMMANDS = ("indec", "king", "hn", "torsion", "chain", "mgs", "walls", "chambers",
               "path", "render")

# Inputs every subcommand needs besides the algebra; a tuple means "one of".
REQUIRED_INPUTS = {
    "indec": (),
    "king": ("theta",),
    "hn": ("stability", "module"),
    "torsion": ("stability", "phase"),
    "chain": ("stability",),
    "mgs": (("stability", "path"),),
    "walls": (),
    "chambers": (),
    "path": ("path",),
    "render": (),
}

FORMATS = {"render": ("svg", "pdf")}


class InputValidator:
    """Validates command requests before any computation runs."""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def validate_file(self, file_path: str, option: str) -> ValidationResult:
        """An input file exists, is a regular file and is readable."""
        result = ValidationResult()
        path = Path(file_path)

        if not path.exists():
            result.add_error(f"File does not exist: {file_path}", file_path=file_path,
                             field=option, suggestion="Check the file path")
            return result

        if not path.is_file():
            result.add_error("Path is not a file", file_path=file_path, field=option,
                             suggestion="Pass a file, not a directory")
            return result

        if not os.access(path, os.R_OK):
            result.add_error("File is not readable (permission denied)", file_path=file_path,
                             field=option, suggestion="Check file permissions")
            return result

        if path.stat().st_size == 0:
            result.add_warning("File is empty", file_path=file_path, field=option)
        return result

    def validate_bound(self, bound: Optional[Sequence[int]],
                       rank: Optional[int] = None) -> ValidationResult:
        """Entries are non-negative, not all zero, one per vertex."""
        result = ValidationResult()
        if bound is None:
            return result
        if any(entry < 0 for entry in bound):
            result.add_error("Bound entries must be non-negative", field="bound",
                             suggestion="Use --bound d1,d2,... with d_i >= 0")
        elif not any(bound):
            result.add_error("Bound must be positive", field="bound",
                             suggestion="At least one entry must be nonzero")
        if rank is not None and len(bound) != rank:
            result.add_error(f"Bound has {len(bound)} entries, the algebra has {rank} vertices",
                             field="bound")
        return result

    def validate_request(self, request) -> ValidationResult:
        """Required inputs per subcommand, formats, seed and input files.

        Args:
            request: A ``CommandRequest``

        Returns:
            ValidationResult
        """
        result = ValidationResult()

        if request.subcommand not in SUBCOMMANDS:
            result.add_error(f"Unknown subcommand: {request.subcommand}", field="subcommand",
                             suggestion=f"Use one of: {', '.join(SUBCOMMANDS)}")
            return result

        if not request.algebra:
            result.add_error("No algebra given", field="algebra",
                             suggestion="Pass --algebra FILE or --algebra builtin:ID")
        elif not request.algebra.startswith("builtin:"):
            result.merge(self.validate_file(request.algebra, "algebra"))

        for required in REQUIRED_INPUTS[request.subcommand]:
            options = required if isinstance(required, tuple) else (required,)
            if all(getattr(request, option) in (None, "") for option in options):
                flags = " or ".join(f"--{option}" for option in options)
                result.add_error(f"'{request.subcommand}' needs {flags}", field=options[0])

        if request.path:
            result.merge(self.validate_file(request.path, "path"))
        if request.stability:
            parts = request.stability.split()
            if len(parts) == 2 and parts[0].lower() in ("table", "path"):
                result.merge(self.validate_file(parts[1], "stability"))

        allowed = FORMATS.get(request.subcommand, ("json",))
        if request.format not in allowed:
            result.add_error(f"Format {request.format!r} is not available for "
                             f"'{request.subcommand}'", field="format",
                             suggestion=f"Use one of: {', '.join(allowed)}")
        elif request.format == "pdf" and not request.out:
            result.add_error("PDF output needs --out", field="out")

        if request.seed < 0:
            result.add_error("Seed must be non-negative", field="seed")

        if request.path and request.stability and request.subcommand == "mgs":
            result.add_info("Both --path and --stability given; --stability is used",
                            field="path")

        for issue in result.issues:
            self.logger.debug(f"{issue.severity.value}: {issue.message}")
        return result
