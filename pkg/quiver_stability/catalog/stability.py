"""Named stability functions on the Kronecker quiver: the slope and the starred slope."""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Set

from ..core.exceptions import ValidationError
from ..stability.functions import SlopeFunction, TableEntry, TableFunction
from ..stability.phase import PhaseValue
from ..torsion.classes import ModuleSet, torsion_class_at
from ..torsion.universe import ModuleClass, ModuleUniverse
from .builtins import KRONECKER, projective_line
from .naming import regular_parameter

logger = logging.getLogger(__name__)

STARRED_ONE = PhaseValue(1, 1)


def kronecker_slope() -> SlopeFunction:
    """``n1/n2`` for dims ``(n1, n2)``, +inf on the preinjective simple."""
    return SlopeFunction((1, 0), (0, 1))


def point_labels(points: Iterable, p: int) -> Set[str]:
    """Labels of points of P^1(F_p); ``None``, ``"inf"`` or ``"∞"`` is infinity."""
    labels = set()
    for point in points:
        if point is None or str(point).lower() in ("inf", "∞"):
            labels.add("inf")
            continue
        try:
            value = int(point)
        except ValueError:
            raise ValidationError(f"{point!r} is not a point of P^1(F_{p})", field="S",
                                  value=point)
        if not 0 <= value < p:
            raise ValidationError(f"{point} is not a point of P^1(F_{p})", field="S", value=point)
        labels.add(str(value))
    return labels


def _in_s(rep, labels: Set[str], higher_degree_in_s: bool) -> bool:
    parameter = regular_parameter(rep)
    if parameter is None:
        raise ValidationError(f"Module of dims {rep.dims} is not regular", field="module")
    if parameter.degree > 1:
        return higher_degree_in_s
    return parameter.label in labels


def _starred_phase(module_class: ModuleClass, U: ModuleUniverse, labels: Set[str],
                   higher_degree_in_s: bool) -> Optional[PhaseValue]:
    n1, n2 = module_class.dims
    if n1 != n2:
        return PhaseValue.infinity() if n2 == 0 else PhaseValue(Fraction(n1, n2))
    regulars = [U.indecomposables[i] for i in module_class.summands
                if U.indecomposables[i].dims[0] == U.indecomposables[i].dims[1]]
    sides = {_in_s(rep, labels, higher_degree_in_s) for rep in regulars}
    if len(sides) > 1 or (sides == {False} and len(regulars) != len(module_class.summands)):
        # No phase fits strictly between 1 and 1*.
        return None
    return STARRED_ONE if sides == {False} else PhaseValue(1)


def starred_universe_classes(U: ModuleUniverse) -> List[int]:
    """The indecomposables together with every sub- and quotient class of them."""
    found = set()
    for i in range(len(U)):
        index = U.indecomposable_class(i)
        found.add(index)
        found.update(U.submodule_classes(index))
        found.update(U.quotient_classes(index))
    return sorted(found)


def higher_degree_notes(U: ModuleUniverse, higher_degree_in_s: bool) -> List[str]:
    """One line per indecomposable regular over a point of degree >= 2, naming its side."""
    side = "S" if higher_degree_in_s else "the complement of S"
    notes = []
    for name, rep in zip(U.ids, U.indecomposables):
        parameter = regular_parameter(rep)
        if parameter is not None and parameter.degree > 1:
            notes.append(f"{name} lies over the degree-{parameter.degree} point "
                         f"{parameter.label} of P^1(F_{U.algebra.p}); placed in {side}")
    return notes


def kronecker_starred_slope(S: Iterable, U: ModuleUniverse,
                            higher_degree_in_s: bool = False) -> TableFunction:
    """Slope phases off the regulars; regulars over S get 1 and the others 1*, with 1 < 1*.

    Points of degree >= 2 (only present over finite fields) join S when
    ``higher_degree_in_s`` is set. Each such class is named in ``notes``.

    ``T_1`` of this function holds every regular, since ``1 < 1*``. The
    torsion class of the regulars over S and the preinjectives is ``T_{1*}``
    of the function built on the complement of S; ``starred_torsion_class``
    returns it.

    Raises:
        ValidationError: If ``U`` is not a Kronecker universe or the table breaks the see-saw.
    """
    if U.algebra.name != KRONECKER:
        raise ValidationError("The starred slope needs a Kronecker universe", field="algebra",
                              value=U.algebra.name)
    labels = point_labels(S, U.algebra.p)
    entries = []
    for index in starred_universe_classes(U):
        module_class = U.all_classes[index]
        value = _starred_phase(module_class, U, labels, higher_degree_in_s)
        if value is None:
            logger.warning(f"Class {module_class.name} mixes both sides of S; left unphased")
            continue
        entries.append(TableEntry(module_class.name, module_class.module, value))
    notes = higher_degree_notes(U, higher_degree_in_s)
    for note in notes:
        logger.warning(note)
    return TableFunction(entries, U.limits, notes=notes)


def starred_torsion_class(S: Iterable, U: ModuleUniverse,
                          higher_degree_in_s: bool = False) -> ModuleSet:
    """The torsion class of the regulars over S and the preinjectives.

    Regulars over S sit at 1* once the complement of S is the set placed at
    1, so the class is ``T_{1*}`` of that starred slope. Higher-degree
    points follow ``higher_degree_in_s`` here as well.
    """
    labels = point_labels(S, U.algebra.p)
    complement = [point for point in projective_line(U.algebra.p)
                  if ("inf" if point is None else str(point)) not in labels]
    sf = kronecker_starred_slope(complement, U, not higher_degree_in_s)
    return torsion_class_at(sf, STARRED_ONE, U)
