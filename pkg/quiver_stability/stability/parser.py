"""Text form of stability functions.

``charge a=<r,...> b=<r,...>`` | ``slope num=<r,...> den=<r,...>`` |
``table <file>`` | ``path <file>`` |
``starred s=<points> [higher=s|other]`` (Kronecker only)
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

from ..core.exceptions import ParseError, ValidationError
from ..repcore.algebra import AlgebraSpec
from ..repcore.limits import DEFAULT_LIMITS, Limits
from .functions import LinearCharge, SlopeFunction, StabilityFunction, TableEntry, TableFunction
from .phase import parse_phase, parse_rational

logger = logging.getLogger(__name__)


def _vector(text: str, n: int, name: str) -> Tuple:
    values = tuple(parse_rational(part) for part in text.split(","))
    if len(values) != n:
        raise ValidationError(f"{name} needs {n} entries, got {len(values)}", field=name,
                              value=text)
    return values


def _keywords(parts, expected, optional=()) -> Dict[str, str]:
    found = {}
    for part in parts:
        key, eq, value = part.partition("=")
        if not eq or key not in expected + optional:
            raise ParseError(f"Unexpected argument {part!r}; "
                             f"expected {', '.join(expected + optional)}")
        found[key] = value
    missing = [key for key in expected if key not in found]
    if missing:
        raise ParseError(f"Missing argument(s): {', '.join(missing)}")
    return found


def parse_table(text: str, universe, limits: Limits = DEFAULT_LIMITS) -> TableFunction:
    """Lines ``module-id phase``; ids are resolved in ``universe``."""
    entries = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("Expected 'module-id phase'", line=line_no, column=1)
        try:
            module = universe.representative(parts[0])
        except KeyError:
            raise ParseError(f"Unknown module id {parts[0]!r}", line=line_no, column=1)
        entries.append(TableEntry(parts[0], module, parse_phase(parts[1])))
    return TableFunction(entries, limits)


def parse_stability(text: str, algebra: AlgebraSpec, universe=None,
                    base_dir: Optional[Path] = None,
                    limits: Limits = DEFAULT_LIMITS) -> StabilityFunction:
    """Build a stability function from its one-line description.

    ``table`` and ``path`` read a file (relative to ``base_dir``) and need a
    module universe to resolve ids and validate paths.
    """
    parts = text.split()
    if not parts:
        raise ParseError("Empty stability description")
    kind, arguments = parts[0].lower(), parts[1:]
    if kind == "charge":
        values = _keywords(arguments, ("a", "b"))
        return LinearCharge(_vector(values["a"], algebra.n, "a"),
                            _vector(values["b"], algebra.n, "b"))
    if kind == "slope":
        values = _keywords(arguments, ("num", "den"))
        return SlopeFunction(_vector(values["num"], algebra.n, "num"),
                             _vector(values["den"], algebra.n, "den"))
    if kind == "starred":
        values = _keywords(arguments, ("s",), ("higher",))
        higher = values.get("higher", "other").lower()
        if higher not in ("s", "other"):
            raise ParseError(f"higher must be 's' or 'other', got {higher!r}")
        if universe is None:
            raise ValidationError("A module universe is required for 'starred' functions",
                                  field="universe")
        from ..catalog.stability import kronecker_starred_slope
        points = [point for point in values["s"].split(",") if point]
        return kronecker_starred_slope(points, universe, higher_degree_in_s=higher == "s")
    if kind in ("table", "path"):
        if len(arguments) != 1:
            raise ParseError(f"'{kind}' takes exactly one file argument")
        if universe is None:
            raise ValidationError(f"A module universe is required for '{kind}' functions",
                                  field="universe")
        path = Path(arguments[0])
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        try:
            content = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"Cannot read {path}: {e}")
        if kind == "table":
            return parse_table(content, universe, limits)
        from ..wallchamber.paths import induced_stability, parse_path
        return induced_stability(parse_path(content, algebra.n), universe)
    raise ParseError(f"Unknown stability kind {parts[0]!r}; "
                     "use charge, slope, table, path or starred")
