"""PDF output of wall-and-chamber scenes through reportlab."""

import logging
from pathlib import Path
from typing import Union

from reportlab.lib import colors
from reportlab.pdfgen import canvas

from ..core.exceptions import ValidationError
from .scene import EXTENT, Scene
from .svg_renderer import CHAMBER_FILLS

logger = logging.getLogger(__name__)


class PDFRenderer:
    """Draws a ``Scene`` on a single square page of ``size`` points."""

    def __init__(self, size: int = 480):
        self.size = size

    def _map(self, x: float, y: float):
        scale = self.size / (2 * EXTENT)
        return (x + EXTENT) * scale, (y + EXTENT) * scale

    def render(self, scene: Scene, output_path: Union[str, Path]) -> Path:
        output_path = Path(output_path)
        if output_path.suffix.lower() != ".pdf":
            raise ValidationError("PDF output needs a .pdf file name", field="out",
                                  value=str(output_path))
        output_path.parent.mkdir(parents=True, exist_ok=True)
        can = canvas.Canvas(str(output_path), pagesize=(self.size, self.size), invariant=1)

        for k, sector in enumerate(scene.sectors):
            can.setFillColor(colors.HexColor(CHAMBER_FILLS[k % len(CHAMBER_FILLS)]))
            outline = can.beginPath()
            outline.moveTo(*self._map(*sector[0]))
            for point in sector[1:]:
                outline.lineTo(*self._map(*point))
            outline.close()
            can.drawPath(outline, stroke=0, fill=1)

        can.setStrokeColor(colors.grey)
        can.setLineWidth(0.5)
        can.line(*self._map(-EXTENT, 0), *self._map(EXTENT, 0))
        can.line(*self._map(0, -EXTENT), *self._map(0, EXTENT))

        can.setStrokeColor(colors.black)
        can.setLineWidth(1.5)
        for start, end in scene.walls:
            can.line(*self._map(*start), *self._map(*end))
        can.setFillColor(colors.black)
        for point in scene.dots:
            can.circle(*self._map(*point), 0.8, stroke=0, fill=1)

        red = colors.HexColor("#c62828")
        if scene.path:
            can.setStrokeColor(red)
            for a, b in zip(scene.path, scene.path[1:]):
                can.line(*self._map(*a), *self._map(*b))
        can.setFont("Helvetica", 9)
        for point, label in scene.markers:
            can.setFillColor(red)
            x, y = self._map(*point)
            can.circle(x, y, 3, stroke=0, fill=1)
            can.setFillColor(colors.black)
            can.drawString(x + 5, y + 5, label)
        if scene.caption:
            can.drawString(6, 6, scene.caption)

        can.showPage()
        can.save()
        logger.info(f"Wrote {output_path}")
        return output_path
