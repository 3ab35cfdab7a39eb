"""Chains of torsion classes, discreteness and maximal green sequence verification."""

import concurrent.futures
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from ..core.exceptions import InternalAssertion, OracleDisagreement
from ..repcore.submodules import enumerate_submodules
from ..stability.functions import StabilityFunction
from ..stability.phase import PhaseValue
from ..stability.semistability import is_stable, quotient_phase
from .classes import ModuleSet, is_torsion_class, module_set, torsion_class_at
from .universe import ModuleUniverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainEntry:
    phase: PhaseValue
    members: ModuleSet


@dataclass
class TorsionChain:
    """Torsion classes by decreasing representative phase, so increasing as sets."""

    entries: List[ChainEntry] = field(default_factory=list)

    @property
    def phases(self) -> List[PhaseValue]:
        return [entry.phase for entry in self.entries]

    @property
    def classes(self) -> List[ModuleSet]:
        return [entry.members for entry in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def steps(self) -> int:
        """Number of strict inclusions ``T_k ⊊ T_{k+1}``."""
        return max(len(self.entries) - 1, 0)


@dataclass
class MGSReport:
    chain: TorsionChain
    verdict: bool
    certificates: List[Dict] = field(default_factory=list)
    oracle_verdict: Optional[bool] = None
    truncated: bool = False


def attained_phases(sf: StabilityFunction, U: ModuleUniverse) -> List[PhaseValue]:
    """Distinct phases of the nonzero quotients of the universe's indecomposables, descending."""
    found = set()
    for M in U.indecomposables:
        for L in enumerate_submodules(M, U.limits):
            if not L.is_full:
                found.add(quotient_phase(sf, L))
    return sorted(found, reverse=True)


def _above(phases: List[PhaseValue]) -> PhaseValue:
    top = phases[0]
    if top.is_infinite:
        return PhaseValue.infinity(top.tag + 1)
    return PhaseValue(top.value + 1)


def _below(phases: List[PhaseValue]) -> PhaseValue:
    bottom = phases[-1]
    if bottom.is_infinite:
        return PhaseValue(Fraction(0))
    return PhaseValue(bottom.value - 1)


def chain_of_torsion_classes(sf: StabilityFunction, U: ModuleUniverse,
                             max_workers: int = 1) -> TorsionChain:
    """Distinct ``T_p`` over the attained phases plus one phase above and one below all.

    Each class is represented by the largest phase producing it.
    """
    phases = attained_phases(sf, U)
    if not phases:
        return TorsionChain([ChainEntry(PhaseValue(Fraction(0)), module_set(U, ()))])
    probes = [_above(phases)] + phases + [_below(phases)]

    if max_workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
            classes = list(executor.map(lambda q: torsion_class_at(sf, q, U), probes))
    else:
        classes = [torsion_class_at(sf, q, U) for q in probes]

    entries: List[ChainEntry] = []
    for probe, members in zip(probes, classes):
        if entries and entries[-1].members == members:
            continue
        if entries and not entries[-1].members < members:
            raise InternalAssertion("Torsion classes are not nested along decreasing phases",
                                    details={"phase": str(probe)})
        entries.append(ChainEntry(probe, members))
    logger.debug(f"Chain of {len(entries)} torsion classes over {len(phases)} phases")
    return TorsionChain(entries)


def stables_at(sf: StabilityFunction, p: PhaseValue, U: ModuleUniverse) -> List[int]:
    """Indices of the stable indecomposables of phase ``p``."""
    return [i for i, M in enumerate(U.indecomposables)
            if sf.phase(M) == p and is_stable(sf, M, U.limits)]


def is_discrete_at(sf: StabilityFunction, p: PhaseValue, U: ModuleUniverse) -> bool:
    return len(stables_at(sf, p, U)) <= 1


def is_discrete(sf: StabilityFunction, U: ModuleUniverse) -> bool:
    return all(is_discrete_at(sf, q, U) for q in attained_phases(sf, U))


def _intermediate_class(lower: ModuleSet, upper: ModuleSet) -> Optional[ModuleSet]:
    U = lower.universe
    extra = sorted(upper.members - lower.members)
    for size in range(1, len(extra)):
        for chosen in itertools.combinations(extra, size):
            candidate = module_set(U, lower.members | set(chosen))
            if is_torsion_class(candidate):
                return candidate
    return None


def _oracle(chain: TorsionChain, U: ModuleUniverse) -> bool:
    classes = chain.classes
    if not classes or classes[0].members or classes[-1].members != frozenset(range(len(U))):
        return False
    return all(_intermediate_class(a, b) is None for a, b in zip(classes, classes[1:]))


def verify_mgs(chain: TorsionChain, sf: StabilityFunction, U: ModuleUniverse) -> MGSReport:
    """Decide whether ``chain`` is a maximal green sequence.

    The verdict requires the chain to run from 0 to the whole universe and
    ``sf`` to have exactly one stable at each step's phase. An exhaustive
    search for torsion classes strictly between consecutive entries runs
    alongside; on exact universes both answers must agree.

    Raises:
        OracleDisagreement: When the two answers differ on an exact universe.
    """
    full = frozenset(range(len(U)))
    certificates: List[Dict] = []
    classes = chain.classes
    verdict = bool(classes) and not classes[0].members and classes[-1].members == full
    if not verdict:
        certificates.append({"kind": "endpoints",
                             "first": classes[0].names if classes else [],
                             "last": classes[-1].names if classes else []})

    for previous, entry in zip(chain.entries, chain.entries[1:]):
        stables = stables_at(sf, entry.phase, U)
        if len(stables) == 1:
            certificates.append({"kind": "discrete", "phase": str(entry.phase),
                                 "stable": U.ids[stables[0]],
                                 "added": sorted(U.ids[i] for i in
                                                 entry.members.members - previous.members.members)})
        else:
            verdict = False
            certificates.append({"kind": "stables", "phase": str(entry.phase),
                                 "modules": [U.ids[i] for i in stables]})
    if verdict and not is_discrete(sf, U):
        verdict = False
        certificates.append({"kind": "not_discrete"})

    oracle_verdict = None
    if len(U) <= U.limits.oracle_max_indecomposables:
        oracle_verdict = _oracle(chain, U)
        if oracle_verdict != verdict:
            if U.exact:
                raise OracleDisagreement(
                    f"Criterion says {verdict}, exhaustive search says {oracle_verdict}",
                    details={"certificates": certificates})
            logger.warning(f"Window-relative disagreement: criterion {verdict}, "
                           f"exhaustive search {oracle_verdict}")
    else:
        logger.warning(f"Exhaustive intermediate-class search skipped for {len(U)} modules")
    return MGSReport(chain, verdict, certificates, oracle_verdict, truncated=not U.exact)
