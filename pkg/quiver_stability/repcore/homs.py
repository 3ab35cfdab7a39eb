"""Hom spaces, isomorphism and indecomposability over F_p."""

import itertools
import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..core.exceptions import SearchSpaceExceeded
from . import field as fp
from .limits import DEFAULT_LIMITS, Limits
from .representation import (Morphism, Representation, SubmoduleEmbedding, combine,
                             identity_morphism)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8192)
def _hom_basis(M: Representation, N: Representation) -> Tuple[Morphism, ...]:
    p = M.p
    n = M.algebra.n
    shapes = [(N.dims[i], M.dims[i]) for i in range(n)]
    offsets = []
    total = 0
    for rows, cols in shapes:
        offsets.append(total)
        total += rows * cols
    if total == 0:
        return ()

    # Row-major vec: vec(A X B) = (A kron B^T) vec(X).
    equations = []
    for arrow, m_a, n_a in zip(M.algebra.arrows, M.matrices, N.matrices):
        s, t = arrow.source - 1, arrow.target - 1
        rows = shapes[t][0] * shapes[s][1]
        if rows == 0:
            continue
        block = fp.zeros(rows, total)
        x_t = np.kron(fp.identity(shapes[t][0]), m_a.T)
        x_s = np.kron(n_a, fp.identity(shapes[s][1]))
        block[:, offsets[t]:offsets[t] + x_t.shape[1]] += x_t
        block[:, offsets[s]:offsets[s] + x_s.shape[1]] -= x_s
        equations.append(block % p)
    system = np.vstack(equations) if equations else fp.zeros(0, total)
    kernel = fp.nullspace(system, p)

    basis = []
    for k in range(kernel.shape[1]):
        vector = kernel[:, k]
        blocks = tuple(vector[offsets[i]:offsets[i] + rows * cols].reshape(rows, cols)
                       for i, (rows, cols) in enumerate(shapes))
        basis.append(Morphism(M, N, blocks))
    return tuple(basis)


def hom_basis(M: Representation, N: Representation) -> List[Morphism]:
    """An F_p-basis of Hom(M, N) as the kernel of the intertwining system."""
    return list(_hom_basis(M, N))


def hom_dimension(M: Representation, N: Representation) -> int:
    return len(_hom_basis(M, N))


def iterate_hom(M: Representation, N: Representation,
                limits: Limits = DEFAULT_LIMITS, skip_zero: bool = True) -> Iterator[Morphism]:
    """Every element of Hom(M, N).

    Raises:
        SearchSpaceExceeded: If ``p ** dim Hom`` exceeds the enumeration limit.
    """
    basis = _hom_basis(M, N)
    size = M.p ** len(basis)
    if size > limits.hom_enumeration_limit:
        raise SearchSpaceExceeded(
            f"Hom space has {size} elements, above the limit {limits.hom_enumeration_limit}",
            size=size, limit=limits.hom_enumeration_limit)
    for coefficients in itertools.product(range(M.p), repeat=len(basis)):
        if skip_zero and not any(coefficients):
            continue
        yield combine(basis, coefficients, M, N)


def _blocks_invertible(morphism: Morphism) -> bool:
    p = morphism.p
    return all(block.size == 0 or fp.is_invertible(block, p) for block in morphism.blocks)


def _invariants(M: Representation) -> Tuple:
    return (M.dims, tuple(fp.rank(mat, M.p) for mat in M.matrices), hom_dimension(M, M))


def find_isomorphism(M: Representation, N: Representation,
                     limits: Limits = DEFAULT_LIMITS) -> Optional[Morphism]:
    """An isomorphism M -> N, or None."""
    if M.algebra != N.algebra or M.dims != N.dims:
        return None
    if M.is_zero:
        return identity_morphism(M)
    if M == N:
        return identity_morphism(M)
    if _invariants(M) != _invariants(N):
        return None
    if hom_dimension(M, N) != hom_dimension(M, M):
        return None
    basis = _hom_basis(M, N)
    # Single basis elements first: they are usually the isomorphism.
    for morphism in basis:
        if _blocks_invertible(morphism):
            return morphism
    for morphism in iterate_hom(M, N, limits):
        if _blocks_invertible(morphism):
            return morphism
    return None


@lru_cache(maxsize=16384)
def _isomorphic(M: Representation, N: Representation, limits: Limits) -> bool:
    return find_isomorphism(M, N, limits) is not None


def is_isomorphic(M: Representation, N: Representation,
                  limits: Limits = DEFAULT_LIMITS) -> bool:
    """True iff some element of Hom(M, N) is invertible at every vertex.

    Raises:
        SearchSpaceExceeded: When the Hom space is too large to enumerate.
    """
    if M.dims != N.dims:
        return False
    if M.sort_key > N.sort_key:
        M, N = N, M
    return _isomorphic(M, N, limits)


def _is_nilpotent(morphism: Morphism) -> bool:
    p = morphism.p
    for block, d in zip(morphism.blocks, morphism.source.dims):
        if d and fp.matrix_power(block, d, p).any():
            return False
    return True


def _splitting_witness(endomorphism: Morphism) -> bool:
    """Fitting: an endomorphism neither nilpotent nor invertible splits M."""
    return not _blocks_invertible(endomorphism) and not _is_nilpotent(endomorphism)


def _same_blocks(first: Morphism, second: Morphism) -> bool:
    return all(np.array_equal(a, b) for a, b in zip(first.blocks, second.blocks))


def _is_idempotent(endomorphism: Morphism) -> bool:
    p = endomorphism.p
    return all(np.array_equal(fp.matmul(b, b, p), b) for b in endomorphism.blocks)


def _fitting_power(endomorphism: Morphism) -> Morphism:
    """``f^N`` with ``N`` the total dimension; im and ker of it are complements."""
    power = endomorphism
    for _ in range(max(endomorphism.source.total_dim - 1, 0)):
        power = power.compose(endomorphism)
    return power


@lru_cache(maxsize=8192)
def _splitting(M: Representation,
               limits: Limits) -> Optional[Tuple[SubmoduleEmbedding, SubmoduleEmbedding]]:
    if M.is_zero:
        return None
    basis = _hom_basis(M, M)
    if len(basis) == 1:
        return None
    candidates = itertools.chain(
        basis,
        (combine(pair, (1, 1), M, M) for pair in itertools.combinations(basis, 2)),
    )
    for candidate in candidates:
        if _splitting_witness(candidate):
            power = _fitting_power(candidate)
            return power.image(), power.kernel()
    identity = identity_morphism(M)
    for endomorphism in iterate_hom(M, M, limits):
        if _is_idempotent(endomorphism) and not _same_blocks(endomorphism, identity):
            return endomorphism.image(), endomorphism.kernel()
    return None


def find_splitting(M: Representation, limits: Limits = DEFAULT_LIMITS
                   ) -> Optional[Tuple[SubmoduleEmbedding, SubmoduleEmbedding]]:
    """Complementary proper submodules ``(X, Y)`` with ``M = X + Y``, or None."""
    return _splitting(M, limits)


def indecomposable_summands(M: Representation,
                            limits: Limits = DEFAULT_LIMITS) -> List[Representation]:
    """A Krull-Schmidt decomposition of ``M`` into indecomposable modules."""
    if M.is_zero:
        return []
    split = find_splitting(M, limits)
    if split is None:
        return [M]
    first, second = split
    return (indecomposable_summands(first.representation, limits)
            + indecomposable_summands(second.representation, limits))


def is_indecomposable(M: Representation, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True iff End(M) has no idempotent besides 0 and the identity.

    Endomorphisms that are neither nilpotent nor invertible are tried first
    (each yields a splitting by Fitting's lemma), then End(M) is enumerated.

    Raises:
        SearchSpaceExceeded: When End(M) is too large to enumerate.
    """
    return not M.is_zero and find_splitting(M, limits) is None


def is_brick(M: Representation, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Every nonzero endomorphism is invertible."""
    return all(_blocks_invertible(f) for f in iterate_hom(M, M, limits))
