"""SVG output of wall-and-chamber scenes."""

import logging
from typing import Iterable, List, Tuple

import svgwrite

from .scene import EXTENT, Point, Scene

logger = logging.getLogger(__name__)

CHAMBER_FILLS = ["#dbe9f6", "#fde8cf", "#e2f0d9", "#f3dcef", "#fff4c2", "#e0e0e0"]


class SVGRenderer:
    """Draws a ``Scene`` into the viewBox ``-2 -2 4 4`` (y axis pointing up)."""

    def __init__(self, size: int = 480, decimal_places: int = 6):
        self.size = size
        self.decimal_places = decimal_places

    def _xy(self, point: Point):
        x, y = point
        return (self._num(x), self._num(-y))

    def _num(self, value: float) -> str:
        # -0.000000 and 0.000000 must serialize identically
        text = f"{value:.{self.decimal_places}f}"
        return text[1:] if text.startswith("-") and not text.strip("-0.") else text

    def _points(self, points: Iterable[Point]) -> List[Tuple[str, str]]:
        return [self._xy(p) for p in points]

    def render(self, scene: Scene) -> str:
        dwg = svgwrite.Drawing(size=(self.size, self.size), profile="full", debug=False)
        dwg.viewbox(-EXTENT, -EXTENT, 2 * EXTENT, 2 * EXTENT)
        stroke = 4 * EXTENT / self.size

        for k, sector in enumerate(scene.sectors):
            dwg.add(dwg.polygon(self._points(sector), fill=CHAMBER_FILLS[k % len(CHAMBER_FILLS)],
                                fill_opacity=0.6, stroke="none", class_="chamber"))

        axes = dwg.g(stroke="#9e9e9e", stroke_width=stroke / 2, class_="axes")
        axes.add(dwg.line(self._xy((-EXTENT, 0)), self._xy((EXTENT, 0))))
        axes.add(dwg.line(self._xy((0, -EXTENT)), self._xy((0, EXTENT))))
        dwg.add(axes)

        for start, end in scene.walls:
            dwg.add(dwg.line(self._xy(start), self._xy(end), stroke="black",
                             stroke_width=stroke * 2, class_="wall"))

        for point in scene.dots:
            dwg.add(dwg.circle(self._xy(point), r=self._num(stroke), fill="black",
                               class_="sample"))

        if scene.path:
            dwg.add(dwg.polyline(self._points(scene.path), fill="none", stroke="#c62828",
                                 stroke_width=stroke * 2, class_="path"))
        for point, label in scene.markers:
            dwg.add(dwg.circle(self._xy(point), r=self._num(stroke * 4), fill="#c62828",
                               class_="crossing"))
            x, y = self._xy((point[0] + 0.06, point[1] + 0.06))
            dwg.add(dwg.text(label, insert=(x, y), font_size=self._num(0.12),
                             class_="label"))

        if scene.caption:
            x, y = self._xy((-EXTENT + 0.05, -EXTENT + 0.08))
            dwg.add(dwg.text(scene.caption, insert=(x, y), font_size=self._num(0.1),
                             class_="caption"))
        logger.debug(f"SVG with {len(scene.walls)} wall primitives, {len(scene.sectors)} sectors")
        return dwg.tostring()
