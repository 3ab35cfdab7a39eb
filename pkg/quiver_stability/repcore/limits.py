"""Enumeration limits shared by every brute-force operation."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Caps on brute-force work.

    ``brute_force_bound`` caps the total dimension of any module whose
    submodules or matrix space is enumerated; ``hom_enumeration_limit`` caps
    the number of Hom-space elements visited by isomorphism and idempotent
    searches; ``oracle_max_indecomposables`` caps the subset search of the
    torsion-class oracle.
    """

    brute_force_bound: int = 6
    hom_enumeration_limit: int = 2 ** 20
    oracle_max_indecomposables: int = 15
    verify_uniqueness: bool = True


DEFAULT_LIMITS = Limits()
