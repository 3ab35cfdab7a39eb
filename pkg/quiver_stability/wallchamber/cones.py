"""King stability spaces as polyhedral cones, and wall detection for n <= 3."""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import RankUnsupported, ValidationError
from ..repcore.algebra import AlgebraSpec, DimensionVector
from ..repcore.indecomposables import enumerate_indecomposables
from ..repcore.limits import DEFAULT_LIMITS, Limits
from ..repcore.representation import Representation
from ..repcore.submodules import check_bound, proper_nonzero_submodules
from ..stability.semistability import KingStatus, king_semistable

logger = logging.getLogger(__name__)

MAX_WALL_RANK = 3

Vector = Tuple[Fraction, ...]


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def primitive(vector: Sequence) -> Tuple[int, ...]:
    """The primitive integer vector on the same ray."""
    values = [Fraction(v) for v in vector]
    scale = 1
    for v in values:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    integers = [int(v * scale) for v in values]
    divisor = 0
    for v in integers:
        divisor = math.gcd(divisor, abs(v))
    if divisor == 0:
        return tuple(integers)
    return tuple(v // divisor for v in integers)


def _perp_basis(normal: Sequence[int]) -> List[Vector]:
    """Integer basis of the hyperplane ``<theta, normal> = 0``."""
    n = len(normal)
    pivot = next(i for i, m in enumerate(normal) if m)
    basis = []
    for k in range(n):
        if k == pivot:
            continue
        vector = [Fraction(0)] * n
        vector[k] = Fraction(normal[pivot])
        vector[pivot] = Fraction(-normal[k])
        basis.append(tuple(vector))
    return basis


def _lift(coordinates: Sequence[Fraction], basis: Sequence[Vector], n: int) -> Vector:
    theta = [Fraction(0)] * n
    for c, vector in zip(coordinates, basis):
        theta = [t + c * v for t, v in zip(theta, vector)]
    return tuple(theta)


@dataclass(frozen=True)
class Cone:
    """``{theta : <theta, normal> = 0 and <theta, h> <= 0 for every h in halfspaces}``."""

    normal: DimensionVector
    halfspaces: Tuple[DimensionVector, ...] = ()
    ambient_rank: int = field(default=0)

    def __post_init__(self):
        if not self.ambient_rank:
            object.__setattr__(self, "ambient_rank", len(self.normal))
        object.__setattr__(self, "halfspaces", tuple(sorted(set(self.halfspaces))))

    def contains(self, theta: Sequence) -> bool:
        return (dot(theta, self.normal) == 0
                and all(dot(theta, h) <= 0 for h in self.halfspaces))

    def _reduced(self) -> Tuple[List[Vector], List[Vector]]:
        """Basis of the normal hyperplane and the constraints in its coordinates."""
        if self.ambient_rank > MAX_WALL_RANK:
            raise RankUnsupported(f"Exact cone geometry needs n <= {MAX_WALL_RANK}",
                                  rank=self.ambient_rank)
        basis = _perp_basis(self.normal)
        constraints = []
        for h in self.halfspaces:
            g = tuple(dot(b, h) for b in basis)
            if any(g):
                constraints.append(g)
        return basis, constraints

    def _strictly_feasible(self, x: Sequence[Fraction], constraints: Sequence[Vector]) -> bool:
        return all(dot(g, x) < 0 for g in constraints)

    def _feasible(self, x: Sequence[Fraction], constraints: Sequence[Vector]) -> bool:
        return all(dot(g, x) <= 0 for g in constraints)

    @staticmethod
    def _boundary_candidates(constraints: Sequence[Vector], dim: int) -> List[Vector]:
        """Directions that can be extreme rays: edges ``±g^perp`` and half-plane normals ``-g``."""
        if dim == 1:
            return [(Fraction(1),), (Fraction(-1),)]
        candidates = []
        for g in constraints:
            candidates.extend([(-g[1], g[0]), (g[1], -g[0]), (-g[0], -g[1])])
        return candidates

    @classmethod
    def _interior_candidates(cls, constraints: Sequence[Vector], dim: int) -> List[Vector]:
        boundary = cls._boundary_candidates(constraints, dim)
        if dim == 1:
            return boundary
        sums = [(a[0] + b[0], a[1] + b[1]) for a in boundary for b in boundary]
        return [c for c in boundary + sums if any(c)]

    def is_codimension_one(self) -> bool:
        """Some theta in the hyperplane is strictly negative on every non-parallel class.

        Raises:
            RankUnsupported: For ambient rank above 3.
        """
        basis, constraints = self._reduced()
        dim = len(basis)
        if dim == 0 or not constraints:
            return True
        return any(self._strictly_feasible(x, constraints)
                   for x in self._interior_candidates(constraints, dim))

    def generators(self) -> List[Tuple[int, ...]]:
        """Primitive integer vectors whose nonnegative span is the cone."""
        basis, constraints = self._reduced()
        dim = len(basis)
        n = self.ambient_rank
        if dim == 0:
            return []
        if not constraints:
            local = []
            for k in range(dim):
                unit = [Fraction(0)] * dim
                unit[k] = Fraction(1)
                local.extend([tuple(unit), tuple(-u for u in unit)])
        else:
            local = [x for x in self._boundary_candidates(constraints, dim)
                     if self._feasible(x, constraints)]
        found = []
        for x in local:
            ray = primitive(_lift(x, basis, n))
            if any(ray) and ray not in found:
                found.append(ray)
        return sorted(found)

    def same_set(self, other: "Cone") -> bool:
        """Exact set equality by mutual containment of generators."""
        if self.ambient_rank != other.ambient_rank:
            return False
        mine, theirs = self.generators(), other.generators()
        return all(other.contains(g) for g in mine) and all(self.contains(g) for g in theirs)

    def to_dict(self):
        return {"normal": list(self.normal), "halfspaces": [list(h) for h in self.halfspaces]}


def stability_space(M: Representation, limits: Limits = DEFAULT_LIMITS) -> Cone:
    """D(M): normal ``[M]`` and one halfspace per proper nonzero submodule class."""
    if M.is_zero:
        raise ValidationError("The zero module has no stability space", field="module")
    check_bound(M, limits)
    halfspaces = {L.dims for L in proper_nonzero_submodules(M, limits)}
    return Cone(M.dims, tuple(halfspaces), M.algebra.n)


def is_wall(M: Representation, limits: Limits = DEFAULT_LIMITS) -> bool:
    """D(M) has codimension one.

    Raises:
        RankUnsupported: For more than three vertices.
    """
    if M.algebra.n > MAX_WALL_RANK:
        raise RankUnsupported(f"Wall detection needs n <= {MAX_WALL_RANK}", rank=M.algebra.n)
    return stability_space(M, limits).is_codimension_one()


@dataclass
class Wall:
    """A codimension-one stability space with every module defining it."""

    cone: Cone
    modules: List[Representation]
    codimension_one: bool = True

    @property
    def module(self) -> Representation:
        return self.modules[0]

    @property
    def multiplicity(self) -> int:
        return len(self.modules)

    @property
    def rays(self) -> List[Tuple[int, ...]]:
        return self.cone.generators()

    @property
    def is_line(self) -> bool:
        rays = self.rays
        return any(tuple(-v for v in r) in rays for r in rays)


def enumerate_walls(algebra: AlgebraSpec, bound: Sequence[int],
                    limits: Limits = DEFAULT_LIMITS,
                    indecomposables: Optional[Sequence[Representation]] = None) -> List[Wall]:
    """Walls of the indecomposables up to ``bound``, merging equal cones.

    Raises:
        RankUnsupported: For more than three vertices.
    """
    if algebra.n > MAX_WALL_RANK:
        raise RankUnsupported(f"Wall enumeration needs n <= {MAX_WALL_RANK}", rank=algebra.n)
    if indecomposables is None:
        indecomposables = enumerate_indecomposables(algebra, bound, limits)
    walls: List[Wall] = []
    for M in indecomposables:
        cone = stability_space(M, limits)
        if not cone.is_codimension_one():
            continue
        for wall in walls:
            if wall.cone.same_set(cone):
                wall.modules.append(M)
                break
        else:
            walls.append(Wall(cone, [M]))
    logger.debug(f"{len(walls)} walls from {len(indecomposables)} indecomposables")
    return walls


def sample_cone_agreement(M: Representation, samples: int = 1000, seed: int = 0,
                          limits: Limits = DEFAULT_LIMITS) -> List[Tuple[int, ...]]:
    """Random integer theta where cone membership and King semistability disagree.

    Half of the samples lie on the hyperplane ``<theta,[M]> = 0`` so that
    both outcomes occur.
    """
    cone = stability_space(M, limits)
    rng = np.random.default_rng(seed)
    n = M.algebra.n
    basis = _perp_basis(M.dims)
    disagreements = []
    for k in range(samples):
        if k % 2 and basis:
            coefficients = rng.integers(-4, 5, size=len(basis))
            theta = primitive(_lift([Fraction(int(c)) for c in coefficients], basis, n))
        else:
            theta = tuple(int(v) for v in rng.integers(-4, 5, size=n))
        semistable = king_semistable(theta, M, limits) is not KingStatus.NOT
        if semistable != cone.contains(theta):
            disagreements.append(theta)
    return disagreements
