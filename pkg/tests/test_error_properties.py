import json
import pytest
from hypothesis import given, settings, strategies as st
import tempfile
from pathlib import Path
from quiver_stability.core.error_handler import ErrorHandler
from quiver_stability.core.exceptions import (
    OutOfUniverse, QuiverStabilityError, SearchSpaceExceeded, ValidationError
)


@pytest.mark.property
@settings(max_examples=40, deadline=None)
@given(st.text())
def test_error_handling_robustness(msg):
    """Every error becomes a JSON-serializable payload and a log entry."""
    with tempfile.TemporaryDirectory() as temp_dir:
        handler = ErrorHandler(log_dir=Path(temp_dir))

        for error in (Exception(msg), QuiverStabilityError(msg),
                      ValidationError(msg, field="theta", value=[msg]),
                      OutOfUniverse(msg, module=msg),
                      SearchSpaceExceeded(msg, size=2 ** 30, limit=2 ** 20)):
            payload = handler.handle_error(error)
            assert set(payload["error"]) == {"code", "message", "details"}
            assert payload["error"]["message"] == msg
            json.dumps(payload)

        for h in handler.logger.handlers:
            h.flush()
        log_files = list(Path(temp_dir).glob("*.log"))
        assert len(log_files) == 1
        assert log_files[0].stat().st_size > 0
