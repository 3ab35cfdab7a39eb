"""Stability functions, semistability and Harder-Narasimhan filtrations."""

from .functions import (LinearCharge, PathInduced, SlopeFunction, StabilityFunction,
                        TableEntry, TableFunction, pairing, seesaw_holds)
from .parser import parse_stability, parse_table
from .phase import PhaseValue, format_rational, parse_phase, parse_rational
from .semistability import (Destabilizer, Direction, HNFiltration, KingStatus,
                            extremal_destabilizer, hn_filtration, hn_filtration_by_quotients,
                            is_semistable, is_semistable_by_quotients, is_stable,
                            king_semistable, phase, quotient_phase, seesaw_violations,
                            slice_simples, stable_factors, submodule_phase, wide_slice)

__all__ = [
    "LinearCharge", "PathInduced", "SlopeFunction", "StabilityFunction", "TableEntry",
    "TableFunction", "pairing", "seesaw_holds", "parse_stability", "parse_table",
    "PhaseValue", "format_rational", "parse_phase", "parse_rational",
    "Destabilizer", "Direction", "HNFiltration", "KingStatus", "extremal_destabilizer",
    "hn_filtration", "hn_filtration_by_quotients", "is_semistable",
    "is_semistable_by_quotients", "is_stable", "king_semistable", "phase", "quotient_phase",
    "seesaw_violations", "slice_simples", "stable_factors", "submodule_phase", "wide_slice",
]
