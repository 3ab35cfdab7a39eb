"""JSON reports and wall/chamber pictures."""

from .pdf_renderer import PDFRenderer
from .reports import (
    chain_document, chambers_document, error_document, hn_document, indec_document,
    king_document, mgs_document, path_document, to_json, torsion_document, walls_document
)
from .scene import Scene, plane_scene, slice_scene
from .svg_renderer import SVGRenderer

__all__ = [
    "PDFRenderer", "SVGRenderer", "Scene", "plane_scene", "slice_scene", "to_json",
    "chain_document", "chambers_document", "error_document", "hn_document", "indec_document",
    "king_document", "mgs_document", "path_document", "torsion_document", "walls_document",
]
