"""Torsion classes, chains of torsion classes and maximal green sequences."""

from .classes import (ModuleSet, PairCheck, enumerate_torsion_classes, filt_closure,
                      is_torsion_class, is_torsion_free_class, module_set, quotient_closure,
                      semistables_at_least, torsion_class_at, torsion_free_at, torsion_pair_at,
                      verify_torsion_pair)
from .sequences import (ChainEntry, MGSReport, TorsionChain, attained_phases,
                        chain_of_torsion_classes, is_discrete, is_discrete_at, stables_at,
                        verify_mgs)
from .universe import ModuleClass, ModuleUniverse, ShortExactClass

__all__ = [
    "ModuleSet", "PairCheck", "enumerate_torsion_classes", "filt_closure", "is_torsion_class",
    "is_torsion_free_class", "module_set", "quotient_closure", "semistables_at_least",
    "torsion_class_at", "torsion_free_at", "torsion_pair_at", "verify_torsion_pair",
    "ChainEntry", "MGSReport", "TorsionChain", "attained_phases", "chain_of_torsion_classes",
    "is_discrete", "is_discrete_at", "stables_at", "verify_mgs",
    "ModuleClass", "ModuleUniverse", "ShortExactClass",
]
