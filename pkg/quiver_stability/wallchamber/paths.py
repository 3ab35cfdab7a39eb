"""Piecewise-linear red paths, their induced stability functions and torsion classes."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import (InternalAssertion, InvalidPath, ParseError, RankUnsupported,
                               ValidationError)
from ..repcore.algebra import DimensionVector
from ..repcore.submodules import enumerate_submodules
from ..stability.functions import PathInduced, StabilityFunction
from ..stability.phase import PhaseValue, format_rational, parse_rational
from ..stability.semistability import (KingStatus, is_semistable, is_stable,
                                       king_semistable, seesaw_violations)
from ..torsion.classes import ModuleSet, PairCheck, module_set, torsion_class_at
from ..torsion.sequences import chain_of_torsion_classes, verify_mgs
from ..torsion.universe import ModuleUniverse
from .cones import dot, is_wall

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class ZeroSet:
    points: Tuple[Fraction, ...] = ()
    intervals: Tuple[Tuple[Fraction, Fraction], ...] = ()

    @property
    def unique(self) -> bool:
        return len(self.points) == 1 and not self.intervals


@dataclass(frozen=True)
class RedPath:
    """Piecewise-linear path through ``breakpoints`` ``(t, gamma(t))`` from 1 to -1.

    Raises:
        ValidationError: On unordered parameters or wrong endpoints.
    """

    breakpoints: Tuple[Tuple[Fraction, Point], ...]

    def __post_init__(self):
        points = tuple((Fraction(t), tuple(Fraction(x) for x in point))
                       for t, point in self.breakpoints)
        object.__setattr__(self, "breakpoints", points)
        if len(points) < 2:
            raise ValidationError("A path needs at least two breakpoints", field="path")
        n = len(points[0][1])
        if any(len(point) != n for _, point in points):
            raise ValidationError("Breakpoints differ in length", field="path")
        if points[0][0] != 0 or points[-1][0] != 1:
            raise ValidationError("Parameters must run from 0 to 1", field="path")
        if any(a >= b for (a, _), (b, _) in zip(points, points[1:])):
            raise ValidationError("Parameters must be strictly increasing", field="path")
        if points[0][1] != (1,) * n or points[-1][1] != (-1,) * n:
            raise ValidationError("A red path starts at (1,...,1) and ends at (-1,...,-1)",
                                  field="path")

    @property
    def rank(self) -> int:
        return len(self.breakpoints[0][1])

    @property
    def parameters(self) -> List[Fraction]:
        return [t for t, _ in self.breakpoints]

    def segments(self):
        return list(zip(self.breakpoints, self.breakpoints[1:]))

    def at(self, t) -> Point:
        t = Fraction(t)
        for (t0, a), (t1, b) in self.segments():
            if t0 <= t <= t1:
                s = (t - t0) / (t1 - t0)
                return tuple(x + s * (y - x) for x, y in zip(a, b))
        raise ValidationError(f"Parameter {t} is outside [0, 1]", field="t", value=t)

    def direction_at(self, t, side: int) -> Optional[Point]:
        """Segment direction left (``side=-1``) or right (``side=1``) of ``t``."""
        t = Fraction(t)
        for (t0, a), (t1, b) in self.segments():
            if (side < 0 and t0 < t <= t1) or (side > 0 and t0 <= t < t1):
                return tuple(y - x for x, y in zip(a, b))
        return None

    def rho(self, dims: Sequence[int], t) -> Fraction:
        return dot(self.at(t), dims)

    def zeros(self, dims: Sequence[int]) -> ZeroSet:
        """Exact zeros of ``t -> <gamma(t), dims>``; breakpoint zeros are counted once."""
        points = set()
        intervals = []
        for (t0, a), (t1, b) in self.segments():
            r0, r1 = dot(a, dims), dot(b, dims)
            if r0 == 0 and r1 == 0:
                intervals.append((t0, t1))
            elif r0 == 0:
                points.add(t0)
            elif r1 == 0:
                points.add(t1)
            elif (r0 > 0) != (r1 > 0):
                points.add(t0 + (t1 - t0) * r0 / (r0 - r1))
        return ZeroSet(tuple(sorted(points)), tuple(intervals))

    def zero_of(self, dims: Sequence[int]) -> Fraction:
        """The unique ``t_M`` for a class of dimension vector ``dims``.

        Raises:
            InvalidPath: If the pairing does not vanish exactly once.
        """
        found = self.zeros(dims)
        if not found.unique:
            raise InvalidPath(f"Pairing with {tuple(dims)} does not vanish exactly once",
                              violations=[_violation(tuple(dims), found)])
        return found.points[0]

    def to_text(self) -> str:
        return "".join(f"{format_rational(t)} {' '.join(format_rational(x) for x in point)}\n"
                       for t, point in self.breakpoints)

    def to_dict(self) -> Dict:
        return {"breakpoints": [{"t": format_rational(t),
                                 "point": [format_rational(x) for x in point]}
                                for t, point in self.breakpoints]}


def _violation(dims: DimensionVector, found: ZeroSet) -> Dict:
    return {"dims": list(dims),
            "zeros": [format_rational(t) for t in found.points],
            "intervals": [[format_rational(a), format_rational(b)] for a, b in found.intervals]}


def parse_path(text: str, n: Optional[int] = None) -> RedPath:
    """One breakpoint per line: ``t x1 ... xn``; ``#`` starts a comment."""
    breakpoints = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is not None and len(parts) != n + 1:
            raise ParseError(f"Expected a parameter and {n} coordinates", line=line_no, column=1)
        try:
            values = [parse_rational(part) for part in parts]
        except ParseError as e:
            raise ParseError(e.message, line=line_no, column=1)
        breakpoints.append((values[0], tuple(values[1:])))
    return RedPath(tuple(breakpoints))


def diagonal_path(n: int) -> RedPath:
    """``gamma(t) = (1-2t, ..., 1-2t)``."""
    return RedPath(((0, (1,) * n), (1, (-1,) * n)))


def load_path(source: Union[str, Path], n: Optional[int] = None) -> RedPath:
    path = Path(source)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read path file {path}: {e}", line=0, column=0)
    return parse_path(content, n)


@dataclass
class Crossing:
    t: Fraction
    modules: List[str]
    semistable: List[str]
    genuine_wall: Optional[bool]


@dataclass
class PathReport:
    valid: bool
    phases: Dict[str, Fraction] = field(default_factory=dict)
    violations: List[Dict] = field(default_factory=list)
    crossings: List[Crossing] = field(default_factory=list)
    dgeneric: Dict = field(default_factory=dict)
    transversality: List[Dict] = field(default_factory=list)


def _class_dimension_vectors(U: ModuleUniverse) -> List[DimensionVector]:
    found = {c.dims for c in U.all_classes}
    return sorted(found, key=lambda d: (sum(d), d))


def _proportional(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(len(a)))


def validate_red_path(path: RedPath, U: ModuleUniverse) -> PathReport:
    """Exact zeros of the pairing with every class in the universe.

    ``valid`` iff each pairing vanishes exactly once and never on an
    interval. Crossings group indecomposables by ``t_M`` and record which of
    them are ``gamma(t_M)``-semistable.
    """
    if path.rank != U.algebra.n:
        raise ValidationError(f"Path lives in rank {path.rank}, the algebra has {U.algebra.n} "
                              "vertices", field="path", value=path.rank)
    report = PathReport(valid=True)
    for dims in _class_dimension_vectors(U):
        found = path.zeros(dims)
        if not found.unique:
            report.valid = False
            report.violations.append(_violation(dims, found))

    by_time: Dict[Fraction, List[int]] = {}
    for i, M in enumerate(U.indecomposables):
        found = path.zeros(M.dims)
        if found.unique:
            report.phases[U.ids[i]] = found.points[0]
            by_time.setdefault(found.points[0], []).append(i)

    condition2_failures = []
    for t in sorted(by_time):
        theta = path.at(t)
        members = by_time[t]
        semistable = [i for i in members
                      if king_semistable(theta, U.indecomposables[i], U.limits)
                      is not KingStatus.NOT]
        try:
            genuine = any(is_wall(U.indecomposables[i], U.limits) for i in semistable)
        except RankUnsupported:
            genuine = None
        report.crossings.append(Crossing(t, [U.ids[i] for i in members],
                                         [U.ids[i] for i in semistable], genuine))
        dims = [U.indecomposables[i].dims for i in semistable]
        if any(not _proportional(a, b) for a in dims for b in dims):
            condition2_failures.append(format_rational(t))
        for i in members:
            d = U.indecomposables[i].dims
            sides = [path.direction_at(t, side) for side in (-1, 1)]
            report.transversality.append({
                "module": U.ids[i], "t": format_rational(t),
                "transversal": all(v is None or dot(v, d) != 0 for v in sides),
            })

    start, end = path.breakpoints[0][1], path.breakpoints[-1][1]
    condition1 = all(dot(start, M.dims) > 0 and dot(end, M.dims) < 0
                     for M in U.indecomposables)
    report.dgeneric = {"condition1": condition1, "condition2": not condition2_failures,
                       "condition2_failures": condition2_failures}
    return report


def induced_stability(path: RedPath, U: ModuleUniverse,
                      verify: Optional[bool] = None) -> PathInduced:
    """The stability function ``M -> t_M`` of a red path valid on ``U``.

    With ``verify`` (default ``limits.verify_uniqueness``) the see-saw
    property and agreement with King semistability are re-checked.

    Raises:
        InvalidPath: If the path is not a red path on ``U``.
    """
    report = validate_red_path(path, U)
    if not report.valid:
        raise InvalidPath("Path is not a red path on this universe",
                          violations=report.violations)
    sf = PathInduced(path)
    verify = U.limits.verify_uniqueness if verify is None else verify
    if verify:
        for i, M in enumerate(U.indecomposables):
            if seesaw_violations(sf, M, U.limits):
                raise InternalAssertion(f"Induced phases break the see-saw on {U.ids[i]}")
        disagreements = king_agreement(sf, path, U)
        if disagreements:
            raise InternalAssertion("Induced semistability differs from King semistability",
                                    details={"modules": disagreements})
    return sf


def king_agreement(sf: StabilityFunction, path: RedPath, U: ModuleUniverse) -> List[str]:
    """Classes where phase semistability and ``gamma(t_M)``-King semistability differ."""
    disagreements = []
    for module_class in U.all_classes:
        M = module_class.module
        theta = path.at(path.zero_of(M.dims))
        by_phase = is_semistable(sf, M, U.limits)
        by_king = king_semistable(theta, M, U.limits) is not KingStatus.NOT
        if by_phase != by_king:
            disagreements.append(module_class.name)
    return disagreements


def bridgeland_torsion(theta: Sequence, U: ModuleUniverse) -> ModuleSet:
    """Indecomposables all of whose nonzero quotients pair nonnegatively with ``theta``."""
    members = []
    for i, M in enumerate(U.indecomposables):
        if all(dot(theta, tuple(m - l for m, l in zip(M.dims, L.dims))) >= 0
               for L in enumerate_submodules(M, U.limits) if not L.is_full):
            members.append(i)
    return module_set(U, members)


def verify_redtorsion(path: RedPath, t, U: ModuleUniverse,
                      sf: Optional[StabilityFunction] = None) -> PairCheck:
    """``T_t`` of the induced stability function equals ``T_{gamma(t)}``."""
    t = Fraction(t)
    sf = sf or induced_stability(path, U)
    by_phase = torsion_class_at(sf, PhaseValue(t), U)
    by_theta = bridgeland_torsion(path.at(t), U)
    if by_phase == by_theta:
        return PairCheck(True)
    differing = sorted(by_phase.members ^ by_theta.members)
    return PairCheck(False, {"t": format_rational(t), "module": U.ids[differing[0]],
                             "phase_side": by_phase.names, "theta_side": by_theta.names})


def redtorsion_parameters(path: RedPath, U: ModuleUniverse) -> List[Fraction]:
    """Breakpoints, attained phases and midpoints between consecutive phases."""
    phases = sorted(set(validate_red_path(path, U).phases.values()))
    midpoints = [(a + b) / 2 for a, b in zip(phases, phases[1:])]
    return sorted(set(path.parameters) | set(phases) | set(midpoints))


def path_mgs_agreement(path: RedPath, U: ModuleUniverse) -> Tuple[bool, bool]:
    """``(verify_mgs verdict, stables have pairwise distinct t)`` for a valid path."""
    sf = induced_stability(path, U)
    report = verify_mgs(chain_of_torsion_classes(sf, U), sf, U)
    stable_times = [sf.phase(M) for M in U.indecomposables if is_stable(sf, M, U.limits)]
    return report.verdict, len(stable_times) == len(set(stable_times))
