"""Plane geometry of a wall-and-chamber picture, shared by the SVG and PDF renderers."""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..core.exceptions import RankUnsupported
from ..wallchamber.chambers import Chamber
from ..wallchamber.cones import Wall
from ..wallchamber.paths import PathReport, RedPath

EXTENT = 2
Point = Tuple[float, float]

_CORNERS = [(EXTENT, EXTENT), (-EXTENT, EXTENT), (-EXTENT, -EXTENT), (EXTENT, -EXTENT)]


def to_box(ray: Sequence) -> Tuple[Fraction, Fraction]:
    """Scale a ray to the boundary of the square ``[-2, 2]^2``."""
    x, y = Fraction(ray[0]), Fraction(ray[1])
    scale = Fraction(EXTENT) / max(abs(x), abs(y))
    return x * scale, y * scale


def _angle(point: Sequence) -> float:
    return math.atan2(float(point[1]), float(point[0])) % (2 * math.pi)


@dataclass
class Scene:
    walls: List[Tuple[Point, Point]] = field(default_factory=list)
    sectors: List[List[Point]] = field(default_factory=list)
    path: List[Point] = field(default_factory=list)
    markers: List[Tuple[Point, str]] = field(default_factory=list)
    dots: List[Point] = field(default_factory=list)
    exact: bool = True
    caption: str = ""


def _sector_polygon(chamber: Chamber) -> List[Point]:
    if chamber.start is None:
        return [(float(x), float(y)) for x, y in _CORNERS]
    start, end = to_box(chamber.start), to_box(chamber.end)
    begin = _angle(start)
    sweep = (_angle(end) - begin) % (2 * math.pi) or 2 * math.pi
    inside = sorted((c for c in _CORNERS if 0 < (_angle(c) - begin) % (2 * math.pi) < sweep),
                    key=lambda c: (_angle(c) - begin) % (2 * math.pi))
    points = [(0, 0), start] + inside + [end]
    return [(float(x), float(y)) for x, y in points]


def plane_scene(walls: Sequence[Wall], chambers: Sequence[Chamber],
                path: Optional[RedPath] = None, report: Optional[PathReport] = None) -> Scene:
    """Lines through the origin, rays from it, chambers as sectors clipped to the square."""
    scene = Scene()
    for wall in walls:
        if wall.cone.ambient_rank != 2:
            raise RankUnsupported("Plane rendering needs two vertices",
                                  rank=wall.cone.ambient_rank)
        if wall.is_line:
            (x0, y0), (x1, y1) = (to_box(ray) for ray in wall.rays)
            scene.walls.append(((float(x0), float(y0)), (float(x1), float(y1))))
            continue
        for ray in wall.rays:
            x, y = to_box(ray)
            scene.walls.append(((0.0, 0.0), (float(x), float(y))))
    scene.sectors = [_sector_polygon(chamber) for chamber in chambers]
    if path is not None:
        scene.path = [(float(p[0]), float(p[1])) for _, p in path.breakpoints]
        if report is not None:
            for crossing in report.crossings:
                x, y = path.at(crossing.t)
                scene.markers.append(((float(x), float(y)), ",".join(crossing.modules)))
    return scene


def slice_scene(walls: Sequence[Wall], steps: int = 161, tolerance: float = 0.0125) -> Scene:
    """Sampled picture of rank-3 walls on the slice ``theta_1 + theta_2 + theta_3 = 1``."""
    scene = Scene(exact=False, caption="sampled slice theta1+theta2+theta3=1 (not exact)")
    u = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
    v = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))
    centre = (1 / 3, 1 / 3, 1 / 3)
    for a in range(steps):
        for b in range(steps):
            x = -EXTENT + 2 * EXTENT * a / (steps - 1)
            y = -EXTENT + 2 * EXTENT * b / (steps - 1)
            theta = [c + x * s + y * t for c, s, t in zip(centre, u, v)]
            for wall in walls:
                normal = wall.cone.normal
                size = math.sqrt(sum(m * m for m in normal))
                if abs(sum(t * m for t, m in zip(theta, normal))) > tolerance * size:
                    continue
                if all(sum(t * h for t, h in zip(theta, half)) <= tolerance * size
                       for half in wall.cone.halfspaces):
                    scene.dots.append((x, y))
                    break
    return scene
