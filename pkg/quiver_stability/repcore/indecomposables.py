"""Enumeration of indecomposable isomorphism classes inside a dimension bound."""

import itertools
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import BoundExceeded, OutOfUniverse, ValidationError
from . import field as fp
from .algebra import AlgebraSpec, DimensionVector
from .homs import _invariants, indecomposable_summands, is_indecomposable, is_isomorphic
from .limits import DEFAULT_LIMITS, Limits
from .representation import Representation, sort_canonically

logger = logging.getLogger(__name__)


def dimension_vectors(bound: Sequence[int]) -> List[DimensionVector]:
    """Nonzero dimension vectors below ``bound``, in canonical order."""
    found = [d for d in itertools.product(*(range(b + 1) for b in bound)) if any(d)]
    return sorted(found, key=lambda d: (sum(d), d))


def _support_connected(algebra: AlgebraSpec, dims: DimensionVector) -> bool:
    support = {v + 1 for v, d in enumerate(dims) if d}
    start = min(support)
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for arrow in algebra.arrows:
            for a, b in ((arrow.source, arrow.target), (arrow.target, arrow.source)):
                if a == v and b in support and b not in seen:
                    seen.add(b)
                    frontier.append(b)
    return seen == support


def _all_matrices(rows: int, cols: int, p: int) -> Iterator[np.ndarray]:
    for values in itertools.product(range(p), repeat=rows * cols):
        yield np.array(values, dtype=fp.DTYPE).reshape(rows, cols)


def _rank_normal_forms(rows: int, cols: int) -> Iterator[np.ndarray]:
    for r in range(min(rows, cols) + 1):
        mat = fp.zeros(rows, cols)
        for i in range(r):
            mat[i, i] = 1
        yield mat


def _candidate_count(algebra: AlgebraSpec, dims: DimensionVector, normalized: Optional[int]) -> int:
    count = 1
    for k, arrow in enumerate(algebra.arrows):
        rows, cols = dims[arrow.target - 1], dims[arrow.source - 1]
        if k == normalized:
            count *= min(rows, cols) + 1
        else:
            count *= algebra.p ** (rows * cols)
    return count


def candidate_representations(algebra: AlgebraSpec, dims: DimensionVector,
                              limits: Limits = DEFAULT_LIMITS) -> Iterator[Representation]:
    """Every representation of dimension ``dims`` up to a partial normal form.

    One arrow between distinct vertices is brought to rank normal form by base
    change at its two ends; every isomorphism class still has a candidate.
    Matrix tuples violating a relation are skipped.
    """
    normalized = None
    for k, arrow in enumerate(algebra.arrows):
        if arrow.source != arrow.target and dims[arrow.source - 1] and dims[arrow.target - 1]:
            normalized = k
            break

    count = _candidate_count(algebra, dims, normalized)
    if count > limits.hom_enumeration_limit:
        raise BoundExceeded(
            f"{count} matrix tuples for dimension vector {dims} exceed the enumeration limit",
            total=sum(dims), bound=limits.brute_force_bound)

    spaces = []
    for k, arrow in enumerate(algebra.arrows):
        rows, cols = dims[arrow.target - 1], dims[arrow.source - 1]
        if k == normalized:
            spaces.append(list(_rank_normal_forms(rows, cols)))
        else:
            spaces.append(list(_all_matrices(rows, cols, algebra.p)))
    for matrices in itertools.product(*spaces):
        try:
            yield Representation(algebra, dims, tuple(matrices))
        except ValidationError:
            continue


def _brute_force(algebra: AlgebraSpec, bound: Sequence[int],
                 limits: Limits) -> List[Representation]:
    found: List[Representation] = []
    for dims in dimension_vectors(bound):
        if not _support_connected(algebra, dims):
            continue
        buckets: Dict[Tuple, List[Representation]] = {}
        for candidate in candidate_representations(algebra, dims, limits):
            if not is_indecomposable(candidate, limits):
                continue
            bucket = buckets.setdefault(_invariants(candidate), [])
            if not any(is_isomorphic(candidate, known, limits) for known in bucket):
                bucket.append(candidate)
        classes = [rep for bucket in buckets.values() for rep in bucket]
        logger.debug(f"Dimension vector {dims}: {len(classes)} indecomposable classes")
        found.extend(classes)
    return sort_canonically(found)


def enumerate_indecomposables(algebra: AlgebraSpec, bound: Sequence[int],
                              limits: Limits = DEFAULT_LIMITS,
                              use_catalog: bool = True) -> List[Representation]:
    """One representative per isomorphism class of indecomposables with dims <= bound.

    Path algebras of type A use the interval classification; everything
    else is enumerated by brute force with isomorphism bucketing.

    Raises:
        BoundExceeded: If the bound is beyond brute-force reach.
    """
    bound = tuple(bound)
    if len(bound) != algebra.n:
        raise ValidationError(f"Bound {bound} does not have {algebra.n} entries",
                              field="bound", value=bound)
    if not any(bound):
        return []

    if use_catalog:
        from ..catalog.builtins import catalog_indecomposables
        listed = catalog_indecomposables(algebra)
        if listed is not None:
            return sort_canonically(
                rep for rep in listed if all(d <= b for d, b in zip(rep.dims, bound)))

    if sum(bound) > limits.brute_force_bound:
        raise BoundExceeded(
            f"Bound {bound} has total dimension {sum(bound)}, above {limits.brute_force_bound}",
            total=sum(bound), bound=limits.brute_force_bound)
    return _brute_force(algebra, bound, limits)


def match_class(M: Representation, classes: Sequence[Representation],
                limits: Limits = DEFAULT_LIMITS) -> int:
    """Index of the member of ``classes`` isomorphic to ``M``.

    Raises:
        OutOfUniverse: If no member is isomorphic to ``M``.
    """
    for index, candidate in enumerate(classes):
        if candidate.dims == M.dims and is_isomorphic(M, candidate, limits):
            return index
    raise OutOfUniverse(f"No listed class is isomorphic to the module of dims {M.dims}",
                        module=str(M.dims))


def decompose(M: Representation, indecomposables: Sequence[Representation],
              limits: Limits = DEFAULT_LIMITS) -> Tuple[int, ...]:
    """Krull-Schmidt multiset of ``M`` as sorted indices into ``indecomposables``."""
    return tuple(sorted(match_class(summand, indecomposables, limits)
                        for summand in indecomposable_summands(M, limits)))
