import tempfile
from pathlib import Path

import pytest

from quiver_stability.core.application_controller import CommandRequest
from quiver_stability.core.exceptions import ValidationError
from quiver_stability.core.validation import InputValidator, ValidationResult, ValidationSeverity


@pytest.fixture
def validator():
    return InputValidator()


class TestValidationResult:

    def test_summary(self):
        result = ValidationResult()
        assert result.get_summary() == "Validation passed"
        result.add_warning("File is empty")
        assert result.get_summary() == "Validation passed with 1 warning(s)"
        result.add_error("No algebra given", field="algebra")
        assert not result.is_valid
        assert result.get_summary() == "Validation failed: 1 error(s), 1 warning(s)"

    def test_merge_keeps_failure(self):
        failed = ValidationResult()
        failed.add_error("bad")
        result = ValidationResult()
        result.add_info("note")
        result.merge(failed)
        assert not result.is_valid
        assert [i.severity for i in result.issues] == [ValidationSeverity.INFO,
                                                       ValidationSeverity.ERROR]

    def test_raise_for_errors(self):
        result = ValidationResult()
        result.raise_for_errors()
        result.add_error("Seed must be non-negative", field="seed")
        with pytest.raises(ValidationError) as exc:
            result.raise_for_errors()
        assert exc.value.field == "seed"
        assert "Seed must be non-negative" in str(exc.value)

    def test_to_dict(self):
        result = ValidationResult()
        result.add_error("x", field="bound", suggestion="y")
        data = result.to_dict()
        assert data["valid"] is False
        assert data["issues"][0] == {"severity": "error", "message": "x", "file_path": None,
                                     "field": "bound", "suggestion": "y"}


class TestInputValidator:

    def test_missing_file(self, validator):
        result = validator.validate_file("/nonexistent/a2.quiver", "algebra")
        assert not result.is_valid
        assert result.errors[0].field == "algebra"

    def test_directory_is_not_a_file(self, validator):
        with tempfile.TemporaryDirectory() as temp_dir:
            assert not validator.validate_file(temp_dir, "path").is_valid

    def test_empty_file_warns(self, validator):
        with tempfile.TemporaryDirectory() as temp_dir:
            empty = Path(temp_dir) / "empty.path"
            empty.touch()
            result = validator.validate_file(str(empty), "path")
            assert result.is_valid
            assert len(result.warnings) == 1

    @pytest.mark.parametrize("bound, rank, valid", [
        ((1, 1), 2, True),
        ((0, 2), 2, True),
        ((1, -1), 2, False),
        ((0, 0), 2, False),
        ((1, 1), 3, False),
        (None, 2, True),
    ])
    def test_validate_bound(self, validator, bound, rank, valid):
        assert validator.validate_bound(bound, rank).is_valid is valid

    def test_builtin_needs_no_file(self, validator):
        request = CommandRequest("indec", algebra="builtin:A2")
        assert validator.validate_request(request).is_valid

    def test_unknown_subcommand(self, validator):
        result = validator.validate_request(CommandRequest("plot", algebra="builtin:A2"))
        assert result.errors[0].field == "subcommand"

    def test_missing_algebra(self, validator):
        result = validator.validate_request(CommandRequest("indec"))
        assert result.errors[0].field == "algebra"

    @pytest.mark.parametrize("subcommand, field", [
        ("king", "theta"),
        ("hn", "stability"),
        ("torsion", "phase"),
        ("chain", "stability"),
        ("mgs", "stability"),
        ("path", "path"),
    ])
    def test_required_inputs(self, validator, subcommand, field):
        request = CommandRequest(subcommand, algebra="builtin:A2",
                                 stability="charge a=1,1 b=1,1" if field == "phase" else None)
        result = validator.validate_request(request)
        assert field in [e.field for e in result.errors]

    def test_mgs_accepts_a_path(self, validator, path_file):
        request = CommandRequest("mgs", algebra="builtin:A2", path=str(path_file("a2-mgs3")))
        assert validator.validate_request(request).is_valid

    def test_both_path_and_stability_is_informational(self, validator, path_file):
        request = CommandRequest("mgs", algebra="builtin:A2", path=str(path_file("a2-mgs3")),
                                 stability="charge a=1,1 b=1,1")
        result = validator.validate_request(request)
        assert result.is_valid
        assert any(i.severity == ValidationSeverity.INFO for i in result.issues)

    def test_stability_file_checked(self, validator):
        request = CommandRequest("chain", algebra="builtin:A2",
                                 stability="table /nonexistent/phases.txt")
        result = validator.validate_request(request)
        assert result.errors[0].field == "stability"

    def test_formats(self, validator):
        assert not validator.validate_request(
            CommandRequest("walls", algebra="builtin:A2", format="svg")).is_valid
        assert validator.validate_request(
            CommandRequest("render", algebra="builtin:A2", format="svg")).is_valid
        result = validator.validate_request(
            CommandRequest("render", algebra="builtin:A2", format="pdf"))
        assert [e.field for e in result.errors] == ["out"]

    def test_negative_seed(self, validator):
        result = validator.validate_request(
            CommandRequest("indec", algebra="builtin:A2", seed=-1))
        assert [e.field for e in result.errors] == ["seed"]
