"""Torsion and torsion-free classes of a stability function inside a module universe."""

import itertools
import logging
import warnings
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..core.exceptions import SearchSpaceExceeded, TruncationWarning
from ..repcore.homs import hom_dimension
from ..repcore.submodules import enumerate_submodules
from ..stability.functions import StabilityFunction
from ..stability.phase import PhaseValue
from ..stability.semistability import is_semistable, quotient_phase, submodule_phase
from .universe import ModuleUniverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModuleSet:
    """A set of indecomposables of a universe, standing for its additive hull."""

    universe: ModuleUniverse = field(compare=False, repr=False)
    members: FrozenSet[int] = frozenset()
    truncated: bool = field(default=False, compare=False)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "ModuleSet") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "ModuleSet") -> bool:
        return self.members < other.members

    @property
    def names(self) -> List[str]:
        return [self.universe.ids[i] for i in sorted(self.members)]

    def contains_class(self, index: int) -> bool:
        """All summands of class ``index`` of ``all_classes`` are members."""
        return self.universe.support(index) <= self.members

    def to_list(self) -> List[str]:
        return self.names


def module_set(universe: ModuleUniverse, members: Iterable[int]) -> ModuleSet:
    return ModuleSet(universe, frozenset(members), truncated=not universe.exact)


def _warn_truncated(universe: ModuleUniverse, what: str) -> None:
    if not universe.exact:
        warnings.warn(f"{what} is relative to the window {universe.bound}", TruncationWarning,
                      stacklevel=3)


def torsion_class_at(sf: StabilityFunction, p: PhaseValue, U: ModuleUniverse) -> ModuleSet:
    """Indecomposables all of whose nonzero quotients have phase >= ``p``."""
    members = []
    for i, M in enumerate(U.indecomposables):
        submodules = enumerate_submodules(M, U.limits)
        if all(quotient_phase(sf, L) >= p for L in submodules if not L.is_full):
            members.append(i)
    return module_set(U, members)


def torsion_free_at(sf: StabilityFunction, p: PhaseValue, U: ModuleUniverse) -> ModuleSet:
    """Indecomposables all of whose nonzero submodules have phase < ``p``."""
    members = []
    for i, M in enumerate(U.indecomposables):
        submodules = enumerate_submodules(M, U.limits)
        if all(submodule_phase(sf, L) < p for L in submodules if not L.is_zero):
            members.append(i)
    return module_set(U, members)


def torsion_pair_at(sf: StabilityFunction, p: PhaseValue,
                    U: ModuleUniverse) -> Tuple[ModuleSet, ModuleSet]:
    return torsion_class_at(sf, p, U), torsion_free_at(sf, p, U)


def semistables_at_least(sf: StabilityFunction, p: PhaseValue, U: ModuleUniverse) -> ModuleSet:
    """Semistable indecomposables of phase >= ``p``."""
    return module_set(U, [i for i, M in enumerate(U.indecomposables)
                          if sf.phase(M) >= p and is_semistable(sf, M, U.limits)])


def quotient_closure(gens: ModuleSet) -> ModuleSet:
    """Summands of all quotients of members (the generators included)."""
    U = gens.universe
    members = set(gens.members)
    for i in gens.members:
        for index in U.quotient_classes(U.indecomposable_class(i)):
            members |= U.support(index)
    return module_set(U, members)


def filt_closure(gens: ModuleSet, U: Optional[ModuleUniverse] = None,
                 fac: bool = False) -> ModuleSet:
    """Indecomposables admitting a filtration with factors among ``gens``.

    ``X`` is in Filt(S) iff ``X = 0`` or some submodule ``L != X`` has
    ``X/L`` in S and ``L`` in Filt(S). With ``fac`` the generators are first
    closed under quotients.
    """
    U = U or gens.universe
    _warn_truncated(U, "Filt closure")
    if fac:
        gens = quotient_closure(gens)
    generator_classes = {U.indecomposable_class(i) for i in gens.members}
    memo: Dict[int, bool] = {-1: True}

    def in_filt(index: int) -> bool:
        if index not in memo:
            memo[index] = False
            memo[index] = any(e.quotient in generator_classes and in_filt(e.sub)
                              for e in U.sequences(index) if e.quotient >= 0)
        return memo[index]

    return module_set(U, [i for i in range(len(U)) if in_filt(U.indecomposable_class(i))])


def _sequences_in(S: FrozenSet[int], U: ModuleUniverse):
    for index, module_class in enumerate(U.all_classes):
        yield index, module_class.support <= S


def is_torsion_class(S: ModuleSet) -> bool:
    """Closed under quotients and extensions inside the universe."""
    U = S.universe
    members = S.members
    for index, inside in _sequences_in(members, U):
        for e in U.sequences(index):
            if inside and e.quotient >= 0 and not U.support(e.quotient) <= members:
                return False
            if (not inside and e.sub >= 0 and e.quotient >= 0
                    and U.support(e.sub) <= members and U.support(e.quotient) <= members):
                return False
    return True


def is_torsion_free_class(S: ModuleSet) -> bool:
    """Closed under submodules and extensions inside the universe."""
    U = S.universe
    members = S.members
    for index, inside in _sequences_in(members, U):
        for e in U.sequences(index):
            if inside and e.sub >= 0 and not U.support(e.sub) <= members:
                return False
            if (not inside and e.sub >= 0 and e.quotient >= 0
                    and U.support(e.sub) <= members and U.support(e.quotient) <= members):
                return False
    return True


def enumerate_torsion_classes(U: ModuleUniverse) -> List[ModuleSet]:
    """Every subset of indecomposables that is a torsion class, by exhaustive search.

    Raises:
        SearchSpaceExceeded: Above ``limits.oracle_max_indecomposables`` indecomposables.
    """
    cap = U.limits.oracle_max_indecomposables
    if len(U) > cap:
        raise SearchSpaceExceeded(f"{len(U)} indecomposables exceed the oracle cap {cap}",
                                  size=2 ** len(U), limit=2 ** cap)
    _warn_truncated(U, "Torsion class enumeration")
    found = []
    for size in range(len(U) + 1):
        for members in itertools.combinations(range(len(U)), size):
            candidate = module_set(U, members)
            if is_torsion_class(candidate):
                found.append(candidate)
    logger.debug(f"{len(found)} torsion classes among {2 ** len(U)} subsets")
    return found


@dataclass
class PairCheck:
    ok: bool
    certificate: Optional[Dict] = None


def verify_torsion_pair(T: ModuleSet, F: ModuleSet, U: Optional[ModuleUniverse] = None) -> PairCheck:
    """Hom(T, F) = 0, and both sides are maximal for that property inside the universe."""
    U = U or T.universe
    modules = U.indecomposables
    for t in sorted(T.members):
        for f in sorted(F.members):
            if hom_dimension(modules[t], modules[f]):
                return PairCheck(False, {"kind": "hom", "from": U.ids[t], "to": U.ids[f]})
    for x in range(len(U)):
        if x not in F and not any(hom_dimension(modules[t], modules[x]) for t in T.members):
            return PairCheck(False, {"kind": "torsion_free_not_maximal", "module": U.ids[x]})
        if x not in T and not any(hom_dimension(modules[x], modules[f]) for f in F.members):
            return PairCheck(False, {"kind": "torsion_not_maximal", "module": U.ids[x]})
    return PairCheck(True)
