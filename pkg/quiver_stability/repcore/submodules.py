"""Submodule enumeration, quotients and lifting of submodules along quotients."""

import itertools
import logging
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from ..core.exceptions import BoundExceeded, InvalidEmbedding
from . import field as fp
from .limits import DEFAULT_LIMITS, Limits
from .representation import Morphism, Representation, SubmoduleEmbedding

logger = logging.getLogger(__name__)


def check_bound(M: Representation, limits: Limits = DEFAULT_LIMITS) -> None:
    if M.total_dim > limits.brute_force_bound:
        raise BoundExceeded(
            f"Module of total dimension {M.total_dim} exceeds the brute-force bound "
            f"{limits.brute_force_bound}",
            total=M.total_dim, bound=limits.brute_force_bound)


@lru_cache(maxsize=4096)
def _submodule_tuples(M: Representation) -> Tuple[SubmoduleEmbedding, ...]:
    p = M.p
    arrows = M.algebra.arrows
    per_vertex = [fp.enumerate_subspaces(d, p) for d in M.dims]
    found = []
    for choice in itertools.product(*per_vertex):
        stable = True
        for arrow, mat in zip(arrows, M.matrices):
            source_basis = choice[arrow.source - 1]
            if source_basis.shape[1] == 0:
                continue
            image = fp.matmul(mat, source_basis, p)
            if not fp.contains(choice[arrow.target - 1], image, p):
                stable = False
                break
        if stable:
            found.append(SubmoduleEmbedding(M, tuple(choice)))
    found.sort(key=lambda L: (sum(L.dims), L.dims, L.key[1]))
    logger.debug(f"Module {M.dims}: {len(found)} submodules")
    return tuple(found)


def enumerate_submodules(M: Representation,
                         limits: Limits = DEFAULT_LIMITS) -> List[SubmoduleEmbedding]:
    """Every submodule of ``M``, 0 and ``M`` included, each exactly once.

    Ordered by total dimension, dimension vector and basis encoding.

    Raises:
        BoundExceeded: If ``M`` is larger than the brute-force bound.
    """
    check_bound(M, limits)
    return list(_submodule_tuples(M))


def proper_nonzero_submodules(M: Representation,
                              limits: Limits = DEFAULT_LIMITS) -> List[SubmoduleEmbedding]:
    return [L for L in enumerate_submodules(M, limits) if not L.is_zero and not L.is_full]


def nonzero_submodules(M: Representation,
                       limits: Limits = DEFAULT_LIMITS) -> List[SubmoduleEmbedding]:
    return [L for L in enumerate_submodules(M, limits) if not L.is_zero]


@lru_cache(maxsize=8192)
def _quotient(L: SubmoduleEmbedding) -> Tuple[Representation, Morphism]:
    M = L.ambient
    p = M.p
    maps = [fp.quotient_maps(basis, p) for basis in L.bases]
    dims = tuple(proj.shape[0] for proj, _ in maps)
    matrices = []
    for arrow, mat in zip(M.algebra.arrows, M.matrices):
        projection = maps[arrow.target - 1][0]
        section = maps[arrow.source - 1][1]
        matrices.append(fp.matmul(fp.matmul(projection, mat, p), section, p))
    N = Representation(M.algebra, dims, tuple(matrices))
    return N, Morphism(M, N, tuple(proj for proj, _ in maps))


def quotient_by(M: Representation, L: SubmoduleEmbedding) -> Tuple[Representation, Morphism]:
    """``M/L`` with induced arrow matrices and the canonical epimorphism.

    Raises:
        InvalidEmbedding: If ``L`` is not an arrow-stable subspace tuple of ``M``.
    """
    if L.ambient != M:
        # Re-validate against M so foreign tuples are rejected.
        L = SubmoduleEmbedding(M, L.bases)
    return _quotient(L)


def preimage(L: SubmoduleEmbedding, K: SubmoduleEmbedding) -> SubmoduleEmbedding:
    """The submodule of ``L.ambient`` containing ``L`` whose image in ``M/L`` is ``K``."""
    M = L.ambient
    N, projection = quotient_by(M, L)
    if K.ambient != N:
        raise InvalidEmbedding("Submodule does not live in the quotient")
    p = M.p
    bases = []
    for basis, (_, section), lifted in zip(L.bases,
                                          (fp.quotient_maps(b, p) for b in L.bases),
                                          K.bases):
        bases.append(np.hstack((basis, fp.matmul(section, lifted, p))))
    return SubmoduleEmbedding(M, tuple(bases))


def image_in_quotient(L: SubmoduleEmbedding, K: SubmoduleEmbedding) -> SubmoduleEmbedding:
    """Image of a submodule ``K`` of ``M`` in ``M/L``."""
    N, projection = quotient_by(L.ambient, L)
    p = N.p
    return SubmoduleEmbedding(N, tuple(
        fp.canonical_basis(fp.matmul(block, basis, p), p)
        for block, basis in zip(projection.blocks, K.bases)))
