"""A finite window onto the module category: indecomposables and their direct sums."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..catalog.builtins import covering_bound
from ..catalog.naming import unique_ids
from ..core.exceptions import OutOfUniverse
from ..repcore.algebra import AlgebraSpec, DimensionVector, dims_leq
from ..repcore.indecomposables import decompose, enumerate_indecomposables, match_class
from ..repcore.limits import DEFAULT_LIMITS, Limits
from ..repcore.representation import Representation, direct_sum
from ..repcore.submodules import enumerate_submodules, quotient_by

logger = logging.getLogger(__name__)

Summands = Tuple[int, ...]


@dataclass(frozen=True)
class ModuleClass:
    """An isomorphism class given by its indecomposable summands (sorted indices)."""

    name: str
    summands: Summands
    module: Representation = field(compare=False, repr=False)

    @property
    def dims(self) -> DimensionVector:
        return self.module.dims

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(self.summands)


@dataclass(frozen=True)
class ShortExactClass:
    """Classes of ``L`` and ``X/L`` for one submodule ``L`` of ``X`` (-1 for zero)."""

    sub: int
    quotient: int


class ModuleUniverse:
    """Indecomposables with dims <= ``bound`` and every direct sum of them that fits.

    Sub- and quotient modules of members fit the bound again, so the window
    is closed under both. ``exact`` is set when the algebra is classified by
    the catalog and the bound covers all of its indecomposables.
    """

    def __init__(self, algebra: AlgebraSpec, bound: Sequence[int],
                 limits: Limits = DEFAULT_LIMITS,
                 indecomposables: Optional[Sequence[Representation]] = None):
        self.algebra = algebra
        self.bound = tuple(bound)
        self.limits = limits
        if indecomposables is None:
            indecomposables = enumerate_indecomposables(algebra, self.bound, limits)
        self.indecomposables: List[Representation] = list(indecomposables)
        self.ids: List[str] = unique_ids(self.indecomposables)
        cover = covering_bound(algebra)
        self.exact = cover is not None and dims_leq(cover, self.bound)
        logger.debug(f"Universe {algebra.name or 'custom'} {self.bound}: "
                     f"{len(self.indecomposables)} indecomposables, exact={self.exact}")

    def __len__(self) -> int:
        return len(self.indecomposables)

    def __iter__(self):
        return iter(self.indecomposables)

    def name_of(self, summands: Iterable[int]) -> str:
        summands = sorted(summands)
        if not summands:
            return "0"
        return "+".join(self.ids[i] for i in summands)

    @cached_property
    def all_classes(self) -> List[ModuleClass]:
        """Every direct sum of indecomposables whose dims fit the bound, in canonical order."""
        dims = [rep.dims for rep in self.indecomposables]
        found: List[Summands] = []

        def extend(start: int, chosen: List[int], total: Tuple[int, ...]) -> None:
            for i in range(start, len(dims)):
                new_total = tuple(a + b for a, b in zip(total, dims[i]))
                if dims_leq(new_total, self.bound):
                    chosen.append(i)
                    found.append(tuple(chosen))
                    extend(i, chosen, new_total)
                    chosen.pop()

        extend(0, [], (0,) * self.algebra.n)
        classes = []
        for summands in found:
            module = direct_sum(*(self.indecomposables[i] for i in summands))
            classes.append(ModuleClass(self.name_of(summands), summands, module))
        classes.sort(key=lambda c: (c.module.total_dim, c.dims, c.summands))
        logger.debug(f"Universe has {len(classes)} classes of modules")
        return classes

    @cached_property
    def _class_index(self) -> Dict[Summands, int]:
        return {c.summands: index for index, c in enumerate(self.all_classes)}

    def class_index(self, summands: Iterable[int]) -> int:
        key = tuple(sorted(summands))
        try:
            return self._class_index[key]
        except KeyError:
            raise OutOfUniverse(f"{self.name_of(key)} does not fit the bound {self.bound}",
                                module=self.name_of(key))

    def identify(self, M: Representation) -> int:
        """Index of the indecomposable isomorphic to ``M``."""
        return match_class(M, self.indecomposables, self.limits)

    def decompose(self, M: Representation) -> Summands:
        if M.is_zero:
            return ()
        return decompose(M, self.indecomposables, self.limits)

    def classify(self, M: Representation) -> int:
        """Index into ``all_classes`` of the class of ``M``; -1 for the zero module."""
        if M.is_zero:
            return -1
        return self.class_index(self.decompose(M))

    def representative(self, name: str) -> Representation:
        """Module with the given id or ``+``-joined class name.

        Raises:
            KeyError: If the name is unknown.
        """
        if name in self.ids:
            return self.indecomposables[self.ids.index(name)]
        for module_class in self.all_classes:
            if module_class.name == name:
                return module_class.module
        raise KeyError(name)

    def sequences(self, index: int) -> List[ShortExactClass]:
        """Classes of ``(L, X/L)`` over all submodules ``L`` of class ``index``."""
        return self._sequences[index]

    @cached_property
    def _sequences(self) -> List[List[ShortExactClass]]:
        table = []
        for module_class in self.all_classes:
            X = module_class.module
            entries = set()
            for L in enumerate_submodules(X, self.limits):
                sub = self.classify(L.representation) if not L.is_zero else -1
                quotient = self.classify(quotient_by(X, L)[0]) if not L.is_full else -1
                entries.add(ShortExactClass(sub, quotient))
            table.append(sorted(entries, key=lambda e: (e.sub, e.quotient)))
        return table

    def quotient_classes(self, index: int) -> List[int]:
        """Classes of the nonzero quotients of class ``index``, itself included."""
        return sorted({e.quotient for e in self.sequences(index) if e.quotient >= 0})

    def submodule_classes(self, index: int) -> List[int]:
        return sorted({e.sub for e in self.sequences(index) if e.sub >= 0})

    def indecomposable_class(self, i: int) -> int:
        return self.class_index((i,))

    def support(self, index: int) -> FrozenSet[int]:
        return self.all_classes[index].support if index >= 0 else frozenset()

    def to_dict(self) -> Dict:
        return {
            "algebra": self.algebra.name or "custom",
            "bound": list(self.bound),
            "exact": self.exact,
            "modules": [{"id": name, "dims": list(rep.dims)}
                        for name, rep in zip(self.ids, self.indecomposables)],
        }
