"""Core exception classes for quiver stability computations."""


class QuiverStabilityError(Exception):
    """Base exception class for all quiver stability errors."""

    def __init__(self, message: str, error_code: str = None, details: dict = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or "UNKNOWN_ERROR"
        self.details = details or {}

    def __str__(self):
        return f"[{self.error_code}] {self.message}"


class ParseError(QuiverStabilityError):
    """Exception raised when an input document does not follow its grammar."""

    def __init__(self, message: str, line: int = None, column: int = None):
        super().__init__(message, "PARSE_ERROR")
        self.line = line
        self.column = column
        self.details.update({"line": line, "column": column})

    def __str__(self):
        if self.line is None:
            return super().__str__()
        return f"[{self.error_code}] line {self.line}, column {self.column}: {self.message}"


class ValidationError(QuiverStabilityError):
    """Exception raised when a parsed value violates an invariant."""

    def __init__(self, message: str, field: str = None, value=None):
        super().__init__(message, "VALIDATION_ERROR")
        self.field = field
        self.value = value
        self.details.update({
            "field": field,
            "value": str(value) if value is not None else None
        })


class ConfigurationError(QuiverStabilityError):
    """Exception raised for configuration related errors."""

    def __init__(self, message: str, config_key: str = None, config_value=None):
        super().__init__(message, "CONFIGURATION_ERROR")
        self.config_key = config_key
        self.config_value = config_value
        self.details.update({
            "config_key": config_key,
            "config_value": str(config_value) if config_value is not None else None
        })


class UnknownBuiltin(QuiverStabilityError):
    """Exception raised for an unrecognized builtin algebra id."""

    def __init__(self, name: str):
        super().__init__(f"Unknown builtin algebra: {name}", "UNKNOWN_BUILTIN")
        self.name = name
        self.details["name"] = name


class BoundExceeded(QuiverStabilityError):
    """Exception raised when an enumeration would exceed the brute-force bound."""

    def __init__(self, message: str, total: int = None, bound: int = None):
        super().__init__(message, "BOUND_EXCEEDED")
        self.total = total
        self.bound = bound
        self.details.update({"total": total, "bound": bound})


class SearchSpaceExceeded(QuiverStabilityError):
    """Exception raised when a Hom space or subset search is too large."""

    def __init__(self, message: str, size: int = None, limit: int = None):
        super().__init__(message, "SEARCH_SPACE_EXCEEDED")
        self.size = size
        self.limit = limit
        self.details.update({"size": size, "limit": limit})


class ZeroObject(QuiverStabilityError):
    """Exception raised when a phase is requested for the zero module."""

    def __init__(self, message: str = "The phase of the zero module is undefined"):
        super().__init__(message, "ZERO_OBJECT")


class OutOfUniverse(QuiverStabilityError):
    """Exception raised when a module lies outside a declared universe."""

    def __init__(self, message: str, module: str = None):
        super().__init__(message, "OUT_OF_UNIVERSE")
        self.module = module
        self.details["module"] = module


class InvalidEmbedding(QuiverStabilityError):
    """Exception raised for subspace tuples that are not arrow-stable."""

    def __init__(self, message: str, arrow: str = None):
        super().__init__(message, "INVALID_EMBEDDING")
        self.arrow = arrow
        self.details["arrow"] = arrow


class NotSemistable(QuiverStabilityError):
    """Exception raised when an operation requires a semistable module."""

    def __init__(self, message: str):
        super().__init__(message, "NOT_SEMISTABLE")


class InvalidPath(QuiverStabilityError):
    """Exception raised for paths that are not red paths on a universe."""

    def __init__(self, message: str, violations: list = None):
        super().__init__(message, "INVALID_PATH")
        self.violations = violations or []
        self.details["violations"] = self.violations


class RankUnsupported(QuiverStabilityError):
    """Exception raised when a geometric operation does not support the rank."""

    def __init__(self, message: str, rank: int = None):
        super().__init__(message, "RANK_UNSUPPORTED")
        self.rank = rank
        self.details["rank"] = rank


class InternalAssertion(QuiverStabilityError):
    """Exception raised when a uniqueness or factoring check fails."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, "INTERNAL_ASSERTION", details)


class OracleDisagreement(QuiverStabilityError):
    """Exception raised when a criterion and its exhaustive oracle disagree."""

    def __init__(self, message: str, details: dict = None):
        super().__init__(message, "ORACLE_DISAGREEMENT", details)


class TruncationWarning(UserWarning):
    """Warning for results that are only valid inside a finite window."""
