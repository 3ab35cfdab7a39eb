"""Chambers of a rank-2 wall arrangement as angular sectors between wall rays."""

import functools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..core.exceptions import RankUnsupported
from .cones import Wall
from .paths import bridgeland_torsion

logger = logging.getLogger(__name__)

Ray = Tuple[int, int]


def cross(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _half(ray: Ray) -> int:
    """0 for angles in [0, pi), 1 for [pi, 2pi)."""
    x, y = ray
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _angle_order(a: Ray, b: Ray) -> int:
    if _half(a) != _half(b):
        return _half(a) - _half(b)
    c = cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def sort_by_angle(rays: Sequence[Ray]) -> List[Ray]:
    """Counterclockwise order starting at the positive x-axis, exact integer comparisons."""
    return sorted(set(rays), key=functools.cmp_to_key(_angle_order))


def perp_ccw(ray: Ray) -> Ray:
    return (-ray[1], ray[0])


@dataclass(frozen=True)
class Chamber:
    """Open sector swept counterclockwise from ``start`` to ``end``.

    Both rays are None for the whole plane; ``start == end`` is the plane
    minus one ray.
    """

    start: Optional[Ray]
    end: Optional[Ray]

    @property
    def interior_point(self) -> Ray:
        if self.start is None:
            return (1, 1)
        if self.start != self.end and cross(self.start, self.end) > 0:
            return (self.start[0] + self.end[0], self.start[1] + self.end[1])
        return perp_ccw(self.start)

    def to_dict(self):
        return {"start": list(self.start) if self.start else None,
                "end": list(self.end) if self.end else None,
                "interior": list(self.interior_point)}


def wall_rays(walls: Sequence[Wall]) -> List[Ray]:
    rays = []
    for wall in walls:
        if wall.cone.ambient_rank != 2:
            raise RankUnsupported("Chamber enumeration is exact only for two vertices",
                                  rank=wall.cone.ambient_rank)
        rays.extend(tuple(r) for r in wall.rays)
    return sort_by_angle(rays)


def chambers_rank2(walls: Sequence[Wall]) -> List[Chamber]:
    """Maximal open sectors between consecutive wall rays.

    Raises:
        RankUnsupported: If a wall does not live in the plane.
    """
    rays = wall_rays(walls)
    if not rays:
        return [Chamber(None, None)]
    chambers = [Chamber(rays[k], rays[(k + 1) % len(rays)]) for k in range(len(rays))]
    logger.debug(f"{len(chambers)} chambers between {len(rays)} rays")
    return chambers


def chamber_torsion_classes(chambers: Sequence[Chamber], U) -> List:
    """The torsion class ``T_theta`` at an interior point of each chamber."""
    return [bridgeland_torsion(chamber.interior_point, U) for chamber in chambers]
