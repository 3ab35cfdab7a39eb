"""Semistability, extremal destabilizers, Harder-Narasimhan and stable-factor filtrations."""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from ..core.exceptions import InternalAssertion, NotSemistable, ValidationError, ZeroObject
from ..repcore import field as fp
from ..repcore.homs import is_isomorphic
from ..repcore.limits import DEFAULT_LIMITS, Limits
from ..repcore.representation import (Morphism, Representation, SubmoduleEmbedding,
                                      zero_submodule)
from ..repcore.submodules import (check_bound, enumerate_submodules, nonzero_submodules,
                                  preimage, proper_nonzero_submodules, quotient_by)
from .functions import StabilityFunction, pairing, seesaw_holds
from .phase import PhaseValue

logger = logging.getLogger(__name__)


class KingStatus(Enum):
    NOT = "not"
    SEMISTABLE = "semistable"
    STABLE = "stable"


class Direction(Enum):
    QUOTIENT = "quotient"
    SUBOBJECT = "subobject"


@dataclass(frozen=True)
class Destabilizer:
    """An extremal quotient or subobject of a module.

    ``embedding`` is the kernel of ``map`` for quotients and the submodule
    itself for subobjects.
    """

    object: Representation
    map: Morphism
    direction: Direction
    embedding: SubmoduleEmbedding
    phase: PhaseValue


@dataclass(frozen=True)
class HNFiltration:
    chain: List[SubmoduleEmbedding]
    factors: List[Representation]
    phases: List[PhaseValue]

    def __len__(self) -> int:
        return len(self.factors)


def phase(sf: StabilityFunction, M: Representation) -> PhaseValue:
    return sf.phase(M)


def submodule_phase(sf: StabilityFunction, L: SubmoduleEmbedding) -> PhaseValue:
    if sf.dims_based:
        return sf.phase_of_dims(L.dims)
    return sf.phase(L.representation)


def quotient_phase(sf: StabilityFunction, L: SubmoduleEmbedding) -> PhaseValue:
    if sf.dims_based:
        return sf.phase_of_dims(tuple(m - l for m, l in zip(L.ambient.dims, L.dims)))
    return sf.phase(quotient_by(L.ambient, L)[0])


def _require_nonzero(M: Representation) -> None:
    if M.is_zero:
        raise ZeroObject()


def is_semistable(sf: StabilityFunction, M: Representation,
                  limits: Limits = DEFAULT_LIMITS) -> bool:
    """No proper nonzero submodule has larger phase than ``M``."""
    _require_nonzero(M)
    own = sf.phase(M)
    return all(submodule_phase(sf, L) <= own for L in proper_nonzero_submodules(M, limits))


def is_stable(sf: StabilityFunction, M: Representation,
              limits: Limits = DEFAULT_LIMITS) -> bool:
    """Every proper nonzero submodule has strictly smaller phase than ``M``."""
    _require_nonzero(M)
    own = sf.phase(M)
    return all(submodule_phase(sf, L) < own for L in proper_nonzero_submodules(M, limits))


def is_semistable_by_quotients(sf: StabilityFunction, M: Representation,
                               limits: Limits = DEFAULT_LIMITS) -> bool:
    """Quotient-side test: every proper nonzero quotient has phase at least ``phase(M)``."""
    _require_nonzero(M)
    own = sf.phase(M)
    return all(quotient_phase(sf, L) >= own for L in proper_nonzero_submodules(M, limits))


def king_semistable(theta: Sequence, M: Representation,
                    limits: Limits = DEFAULT_LIMITS) -> KingStatus:
    """King's criterion: ``<theta,[M]> = 0`` and ``<theta,[L]> <= 0`` on submodules."""
    _require_nonzero(M)
    if len(theta) != M.algebra.n:
        raise ValidationError(f"theta needs {M.algebra.n} entries", field="theta",
                              value=[str(t) for t in theta])
    check_bound(M, limits)
    if pairing(theta, M.dims) != 0:
        return KingStatus.NOT
    values = [pairing(theta, L.dims) for L in proper_nonzero_submodules(M, limits)]
    if any(value > 0 for value in values):
        return KingStatus.NOT
    if all(value < 0 for value in values):
        return KingStatus.STABLE
    return KingStatus.SEMISTABLE


def _induced_map(source: SubmoduleEmbedding, target: SubmoduleEmbedding) -> Morphism:
    """``M/source -> M/target`` for ``source`` inside ``target``."""
    M = source.ambient
    p = M.p
    small, _ = quotient_by(M, source)
    large, large_projection = quotient_by(M, target)
    blocks = []
    for basis, block in zip(source.bases, large_projection.blocks):
        section = fp.quotient_maps(basis, p)[1]
        blocks.append(fp.matmul(block, section, p))
    return Morphism(small, large, tuple(blocks))


def _assert_factors(first: Morphism, second: Morphism, through: Morphism) -> None:
    composed = through.compose(first)
    if not all(np.array_equal(a, b) for a, b in zip(composed.blocks, second.blocks)):
        raise InternalAssertion("Equal-phase competitor does not factor through the destabilizer")


def extremal_destabilizer(sf: StabilityFunction, M: Representation, direction: Direction,
                          limits: Limits = DEFAULT_LIMITS) -> Destabilizer:
    """The maximally destabilizing quotient or subobject of ``M``.

    Quotients: the smallest phase, and among those the one every other
    equal-phase quotient map factors through. Subobjects: dually, the
    largest phase and the submodule containing every equal-phase competitor.
    Factoring and semistability of the winner are checked before returning.

    Raises:
        InternalAssertion: When no candidate has the factoring property.
    """
    _require_nonzero(M)
    direction = Direction(direction)
    submodules = enumerate_submodules(M, limits)
    if direction is Direction.QUOTIENT:
        scored = [(quotient_phase(sf, L), L) for L in submodules if not L.is_full]
        extreme = min(score for score, _ in scored)
    else:
        scored = [(submodule_phase(sf, L), L) for L in submodules if not L.is_zero]
        extreme = max(score for score, _ in scored)
    tied = [L for score, L in scored if score == extreme]

    if direction is Direction.QUOTIENT:
        winners = [L for L in tied if all(other.contains(L) for other in tied)]
    else:
        winners = [L for L in tied if all(L.contains(other) for other in tied)]
    if len(winners) != 1:
        raise InternalAssertion(
            f"{len(winners)} candidates for the extremal {direction.value} of dims {M.dims}",
            details={"phase": str(extreme), "tied": [list(L.dims) for L in tied]})
    chosen = winners[0]

    if direction is Direction.QUOTIENT:
        target, projection = quotient_by(M, chosen)
        for other in tied:
            _assert_factors(projection, quotient_by(M, other)[1], _induced_map(chosen, other))
        result = Destabilizer(target, projection, direction, chosen, extreme)
    else:
        inclusion = chosen.inclusion()
        for other in tied:
            restricted = SubmoduleEmbedding(chosen.representation, tuple(
                fp.coordinates(big, small) for big, small in zip(chosen.bases, other.bases)))
            if inclusion.compose(restricted.inclusion()).image() != other:
                raise InternalAssertion(
                    "Equal-phase subobject does not factor through the destabilizer")
        result = Destabilizer(chosen.representation, inclusion, direction, chosen, extreme)

    if not is_semistable(sf, result.object, limits):
        raise InternalAssertion(f"Extremal {direction.value} of dims {M.dims} is not semistable")
    return result


def _same_factor_classes(first: Sequence[Representation], second: Sequence[Representation],
                         sf: StabilityFunction, limits: Limits) -> bool:
    remaining = list(second)
    for factor in first:
        for index, candidate in enumerate(remaining):
            if (candidate.dims == factor.dims and sf.phase(candidate) == sf.phase(factor)
                    and is_isomorphic(candidate, factor, limits)):
                del remaining[index]
                break
        else:
            return False
    return not remaining


def hn_filtration_by_quotients(sf: StabilityFunction, M: Representation,
                               limits: Limits = DEFAULT_LIMITS) -> List[Representation]:
    """HN factors, largest phase first, built by splitting off maximally destabilizing quotients."""
    _require_nonzero(M)
    factors = []
    current = M
    while not current.is_zero:
        found = extremal_destabilizer(sf, current, Direction.QUOTIENT, limits)
        factors.append(found.object)
        current = found.embedding.representation
    return list(reversed(factors))


def hn_filtration(sf: StabilityFunction, M: Representation, limits: Limits = DEFAULT_LIMITS,
                  verify: Optional[bool] = None) -> HNFiltration:
    """The Harder-Narasimhan filtration of ``M``.

    Each step takes the maximally destabilizing subobject of the current
    quotient and lifts it back to ``M``. With ``verify`` (default from
    ``limits.verify_uniqueness``) the quotient-first construction is run as
    well and its factor classes must match.
    """
    _require_nonzero(M)
    verify = limits.verify_uniqueness if verify is None else verify
    chain = [zero_submodule(M)]
    factors: List[Representation] = []
    phases: List[PhaseValue] = []
    while not chain[-1].is_full:
        quotient, _ = quotient_by(M, chain[-1])
        found = extremal_destabilizer(sf, quotient, Direction.SUBOBJECT, limits)
        if phases and not found.phase < phases[-1]:
            raise InternalAssertion("HN phases are not strictly decreasing",
                                    details={"phases": [str(q) for q in phases + [found.phase]]})
        chain.append(preimage(chain[-1], found.embedding))
        factors.append(found.object)
        phases.append(found.phase)
    logger.debug(f"HN filtration of {M.dims}: phases {[str(q) for q in phases]}")
    if verify and not _same_factor_classes(factors, hn_filtration_by_quotients(sf, M, limits),
                                           sf, limits):
        raise InternalAssertion(f"HN factors of {M.dims} depend on the construction")
    return HNFiltration(chain, factors, phases)


def _composition_factors(sf: StabilityFunction, M: Representation, target: PhaseValue,
                         last: bool, limits: Limits) -> List[Representation]:
    factors = []
    current = M
    while not current.is_zero:
        same = [L for L in nonzero_submodules(current, limits)
                if submodule_phase(sf, L) == target]
        smallest = min(sum(L.dims) for L in same)
        minimal = [L for L in same if sum(L.dims) == smallest]
        chosen = minimal[-1] if last else minimal[0]
        factors.append(chosen.representation)
        current = quotient_by(current, chosen)[0]
    return factors


def stable_factors(sf: StabilityFunction, M: Representation, limits: Limits = DEFAULT_LIMITS,
                   verify: Optional[bool] = None) -> List[Representation]:
    """Jordan-Holder factors of a semistable module inside its phase slice.

    Minimal nonzero submodules of the same phase are stable; splitting them
    off repeatedly yields the factors. A second pass picking the last
    minimal candidate instead of the first must give the same multiset.

    Raises:
        NotSemistable: If ``M`` is not semistable.
    """
    if not is_semistable(sf, M, limits):
        raise NotSemistable(f"Module of dims {M.dims} is not semistable")
    verify = limits.verify_uniqueness if verify is None else verify
    target = sf.phase(M)
    factors = _composition_factors(sf, M, target, False, limits)
    if verify and not _same_factor_classes(
            factors, _composition_factors(sf, M, target, True, limits), sf, limits):
        raise InternalAssertion(f"Stable factors of {M.dims} depend on the selection order")
    return factors


def wide_slice(sf: StabilityFunction, target: PhaseValue, universe: Sequence[Representation],
               limits: Limits = DEFAULT_LIMITS) -> List[Representation]:
    """Members of ``universe`` semistable of phase exactly ``target``."""
    return [M for M in universe
            if not M.is_zero and sf.phase(M) == target and is_semistable(sf, M, limits)]


def slice_simples(sf: StabilityFunction, target: PhaseValue, members: Sequence[Representation],
                  limits: Limits = DEFAULT_LIMITS) -> List[Representation]:
    """Members with no proper nonzero submodule that is semistable of phase ``target``."""
    simples = []
    for M in members:
        blocked = False
        for L in proper_nonzero_submodules(M, limits):
            if submodule_phase(sf, L) != target:
                continue
            if is_semistable(sf, L.representation, limits):
                blocked = True
                break
        if not blocked:
            simples.append(M)
    return simples


def seesaw_violations(sf: StabilityFunction, M: Representation,
                      limits: Limits = DEFAULT_LIMITS) -> List[SubmoduleEmbedding]:
    """Submodules ``L`` for which ``0 -> L -> M -> M/L -> 0`` breaks the trichotomy."""
    own = sf.phase(M)
    return [L for L in proper_nonzero_submodules(M, limits)
            if not seesaw_holds(submodule_phase(sf, L), own, quotient_phase(sf, L))]


def theta_pairing(theta: Sequence, M: Representation) -> Fraction:
    return pairing(theta, M.dims)
