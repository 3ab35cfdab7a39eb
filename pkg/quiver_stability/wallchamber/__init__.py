"""King stability spaces, walls, chambers and red paths."""

from .chambers import Chamber, chamber_torsion_classes, chambers_rank2, sort_by_angle
from .cones import (Cone, Wall, enumerate_walls, is_wall, primitive, sample_cone_agreement,
                    stability_space)
from .paths import (Crossing, PathReport, RedPath, ZeroSet, bridgeland_torsion, diagonal_path,
                    induced_stability, king_agreement, load_path, parse_path,
                    path_mgs_agreement, redtorsion_parameters, validate_red_path,
                    verify_redtorsion)

__all__ = [
    "Chamber", "chamber_torsion_classes", "chambers_rank2", "sort_by_angle",
    "Cone", "Wall", "enumerate_walls", "is_wall", "primitive", "sample_cone_agreement",
    "stability_space",
    "Crossing", "PathReport", "RedPath", "ZeroSet", "bridgeland_torsion", "diagonal_path",
    "induced_stability", "king_agreement", "load_path", "parse_path", "path_mgs_agreement",
    "redtorsion_parameters", "validate_red_path", "verify_redtorsion",
]
