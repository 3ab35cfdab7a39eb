"""Stability functions: linear charges, slopes, explicit tables and path-induced phases."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.exceptions import OutOfUniverse, ValidationError, ZeroObject
from ..repcore.algebra import DimensionVector
from ..repcore.homs import is_isomorphic
from ..repcore.limits import DEFAULT_LIMITS, Limits
from ..repcore.representation import Representation
from ..repcore.submodules import proper_nonzero_submodules, quotient_by
from .phase import PhaseValue, format_rational

logger = logging.getLogger(__name__)


def pairing(vector: Sequence[Fraction], dims: Sequence[int]) -> Fraction:
    return sum((Fraction(v) * d for v, d in zip(vector, dims)), Fraction(0))


def seesaw_holds(left: PhaseValue, middle: PhaseValue, right: PhaseValue) -> bool:
    """Exactly one of ``L < M < N``, ``L > M > N``, ``L = M = N``."""
    return ((left < middle < right) or (left > middle > right)
            or (left == middle == right))


class StabilityFunction(ABC):
    """Assigns a ``PhaseValue`` to every nonzero module in scope.

    Subclasses whose phase depends only on the dimension vector set
    ``dims_based`` and implement ``phase_of_dims``; semistability checks
    then skip building submodule representations.
    """

    kind: str = ""
    dims_based: bool = False
    notes: Tuple[str, ...] = ()

    def phase(self, M: Representation) -> PhaseValue:
        if M.is_zero:
            raise ZeroObject()
        return self._phase(M)

    def phase_of_dims(self, dims: DimensionVector) -> PhaseValue:
        raise NotImplementedError(f"{self.kind} phases depend on more than the dimension vector")

    def _phase(self, M: Representation) -> PhaseValue:
        return self.phase_of_dims(M.dims)

    @abstractmethod
    def describe(self) -> Dict:
        """JSON-ready description for reports."""


def _as_fractions(values: Sequence, name: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(v) for v in values)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be rational", field=name, value=list(values))


class LinearCharge(StabilityFunction):
    """Central charge ``Z(m) = -<a,m> + i <b,m>`` with ``b`` strictly positive.

    The phase key is ``<a,m> / <b,m>`` rather than ``-<a,m> / <b,m>``: it is
    ``-cot(arg Z)``, which is strictly increasing on ``(0, pi)``, so it sorts
    modules exactly as ``arg Z`` does.
    """

    kind = "charge"
    dims_based = True

    def __init__(self, a: Sequence, b: Sequence):
        self.a = _as_fractions(a, "a")
        self.b = _as_fractions(b, "b")
        if len(self.a) != len(self.b):
            raise ValidationError("Charge vectors a and b differ in length", field="b",
                                  value=len(self.b))
        if any(value <= 0 for value in self.b):
            raise ValidationError("Charge vector b must be strictly positive", field="b",
                                  value=[str(v) for v in self.b])

    def phase_of_dims(self, dims: DimensionVector) -> PhaseValue:
        if not any(dims):
            raise ZeroObject()
        return PhaseValue(pairing(self.a, dims) / pairing(self.b, dims))

    def describe(self) -> Dict:
        return {"kind": self.kind, "a": [format_rational(v) for v in self.a],
                "b": [format_rational(v) for v in self.b]}


class SlopeFunction(StabilityFunction):
    """``<num,m> / <den,m>``, with +inf where the denominator pairing vanishes.

    ``den`` must be nonnegative and ``num`` positive wherever ``den`` is zero,
    so that 0/0 never occurs on a nonzero dimension vector.
    """

    kind = "slope"
    dims_based = True

    def __init__(self, num: Sequence, den: Sequence):
        self.num = _as_fractions(num, "num")
        self.den = _as_fractions(den, "den")
        if len(self.num) != len(self.den):
            raise ValidationError("Slope vectors num and den differ in length", field="den",
                                  value=len(self.den))
        for i, (n, d) in enumerate(zip(self.num, self.den)):
            if d < 0 or (d == 0 and n <= 0):
                raise ValidationError(
                    f"Slope undefined on the simple at vertex {i + 1}: num={n}, den={d}",
                    field="den", value=[str(v) for v in self.den])

    def phase_of_dims(self, dims: DimensionVector) -> PhaseValue:
        if not any(dims):
            raise ZeroObject()
        denominator = pairing(self.den, dims)
        if denominator == 0:
            return PhaseValue.infinity()
        return PhaseValue(pairing(self.num, dims) / denominator)

    def describe(self) -> Dict:
        return {"kind": self.kind, "num": [format_rational(v) for v in self.num],
                "den": [format_rational(v) for v in self.den]}


@dataclass(frozen=True)
class TableEntry:
    name: str
    module: Representation
    phase: PhaseValue


class TableFunction(StabilityFunction):
    """Phases listed per isomorphism class; the see-saw property is checked on construction.

    Every short exact sequence whose three terms are listed classes, with the
    middle term a listed representative, must satisfy the trichotomy.

    ``notes`` are carried into every report that uses the table.

    Raises:
        ValidationError: On a see-saw violation or a class listed twice.
        OutOfUniverse: From ``phase`` for a module isomorphic to no entry.
    """

    kind = "table"

    def __init__(self, entries: Sequence[TableEntry], limits: Limits = DEFAULT_LIMITS,
                 validate: bool = True, notes: Sequence[str] = ()):
        self.limits = limits
        self.notes = tuple(notes)
        self.entries: List[TableEntry] = list(entries)
        for i, entry in enumerate(self.entries):
            if entry.module.is_zero:
                raise ZeroObject("A table cannot assign a phase to the zero module")
            for other in self.entries[:i]:
                if other.module.dims == entry.module.dims and is_isomorphic(
                        other.module, entry.module, limits):
                    raise ValidationError(f"Classes {other.name} and {entry.name} are isomorphic",
                                          field="table", value=entry.name)
        if validate:
            violation = self.seesaw_violation()
            if violation is not None:
                raise ValidationError(
                    f"See-saw fails for {violation[0]} -> {violation[1]} -> {violation[2]}",
                    field="table", value=list(violation))

    def _lookup(self, M: Representation) -> Optional[TableEntry]:
        for entry in self.entries:
            if entry.module.dims == M.dims and is_isomorphic(entry.module, M, self.limits):
                return entry
        return None

    def _phase(self, M: Representation) -> PhaseValue:
        entry = self._lookup(M)
        if entry is None:
            raise OutOfUniverse(f"Module of dims {M.dims} is not listed in the phase table",
                                module=str(M.dims))
        return entry.phase

    def seesaw_violation(self) -> Optional[Tuple[str, str, str]]:
        """Names ``(L, M, N)`` of the first violating sequence, or None."""
        for entry in self.entries:
            for L in proper_nonzero_submodules(entry.module, self.limits):
                sub = self._lookup(L.representation)
                quotient = self._lookup(quotient_by(entry.module, L)[0])
                if sub is None or quotient is None:
                    continue
                if not seesaw_holds(sub.phase, entry.phase, quotient.phase):
                    return sub.name, entry.name, quotient.name
        return None

    def describe(self) -> Dict:
        return {"kind": self.kind,
                "entries": {entry.name: str(entry.phase) for entry in self.entries}}


class PathInduced(StabilityFunction):
    """Phase ``t_M``: the parameter where the path's pairing with ``[M]`` vanishes.

    ``path`` is any object offering ``zero_of(dims) -> Fraction``.
    """

    kind = "path"
    dims_based = True

    def __init__(self, path):
        self.path = path

    def phase_of_dims(self, dims: DimensionVector) -> PhaseValue:
        if not any(dims):
            raise ZeroObject()
        return PhaseValue(self.path.zero_of(dims))

    def describe(self) -> Dict:
        return {"kind": self.kind, "path": self.path.to_dict()}
