"""Built-in algebras and closed-form families of indecomposables."""

import logging
import re
from typing import List, Optional

from ..core.exceptions import BoundExceeded, InternalAssertion, UnknownBuiltin, ValidationError
from ..repcore import field as fp
from ..repcore.algebra import AlgebraSpec, Arrow, QuiverSpec
from ..repcore.field import FieldSpec
from ..repcore.homs import is_indecomposable
from ..repcore.representation import Representation, sort_canonically

logger = logging.getLogger(__name__)

KRONECKER = "kronecker"
MAX_INTERVAL_RANK = 8
MAX_KRONECKER_N = 3

_A_PATTERN = re.compile(r"^A(\d+)(?::([rl]*))?$")


def type_a(n: int, orientation: Optional[str] = None, p: int = 2) -> AlgebraSpec:
    """The path algebra of A_n; letter k of ``orientation`` orients arrow k.

    ``r`` is ``k -> k+1`` and ``l`` is ``k+1 -> k``; the default is linear.
    """
    if orientation is None:
        orientation = "r" * (n - 1)
    if n < 1 or len(orientation) != n - 1 or set(orientation) - {"r", "l"}:
        raise ValidationError(f"Orientation word {orientation!r} does not fit A{n}",
                              field="orientation", value=orientation)
    arrows = tuple(
        Arrow(f"a{k}", k, k + 1) if letter == "r" else Arrow(f"a{k}", k + 1, k)
        for k, letter in enumerate(orientation, start=1)
    )
    name = f"A{n}" if orientation == "r" * (n - 1) else f"A{n}:{orientation}"
    return AlgebraSpec(QuiverSpec(n, arrows), (), FieldSpec(p), name=name)


def kronecker(p: int = 2) -> AlgebraSpec:
    """Two parallel arrows ``a, b: 1 -> 2``."""
    return AlgebraSpec(QuiverSpec(2, (Arrow("a", 1, 2), Arrow("b", 1, 2))), (),
                       FieldSpec(p), name=KRONECKER)


def builtin(name: str, p: int = 2) -> AlgebraSpec:
    """Resolve a builtin id such as ``A2``, ``A3:rl`` or ``kronecker``.

    Raises:
        UnknownBuiltin: For unrecognized ids.
    """
    if name.lower() == KRONECKER:
        return kronecker(p)
    match = _A_PATTERN.match(name)
    if match:
        n = int(match.group(1))
        try:
            return type_a(n, match.group(2), p)
        except ValidationError:
            raise UnknownBuiltin(name)
    raise UnknownBuiltin(name)


def type_a_orientation(algebra: AlgebraSpec) -> Optional[str]:
    """Orientation word when ``algebra`` is a catalog A_n path algebra."""
    match = _A_PATTERN.match(algebra.name)
    if not match or algebra.relations:
        return None
    n = int(match.group(1))
    return match.group(2) if match.group(2) is not None else "r" * (n - 1)


def An_intervals(n: int, orientation: Optional[str] = None, p: int = 2) -> List[Representation]:
    """The interval modules ``[i, j]`` of A_n, identity maps inside the interval."""
    if n > MAX_INTERVAL_RANK:
        raise ValidationError(f"Interval catalog supports n <= {MAX_INTERVAL_RANK}",
                              field="n", value=n)
    algebra = type_a(n, orientation, p)
    modules = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            dims = tuple(1 if i <= v <= j else 0 for v in range(1, n + 1))
            matrices = []
            for arrow in algebra.arrows:
                rows, cols = dims[arrow.target - 1], dims[arrow.source - 1]
                matrices.append(fp.identity(1) if rows and cols else fp.zeros(rows, cols))
            modules.append(Representation(algebra, dims, tuple(matrices)))
    return sort_canonically(modules)


def projective_kronecker(n: int, algebra: AlgebraSpec) -> Representation:
    """P_n with dims (n, n+1): ``a`` embeds as the top block, ``b`` as the bottom."""
    a = fp.zeros(n + 1, n)
    b = fp.zeros(n + 1, n)
    for i in range(n):
        a[i, i] = 1
        b[i + 1, i] = 1
    return Representation(algebra, (n, n + 1), (a, b))


def injective_kronecker(n: int, algebra: AlgebraSpec) -> Representation:
    """I_n with dims (n+1, n): ``a`` forgets the last coordinate, ``b`` the first."""
    a = fp.zeros(n, n + 1)
    b = fp.zeros(n, n + 1)
    for i in range(n):
        a[i, i] = 1
        b[i, i + 1] = 1
    return Representation(algebra, (n + 1, n), (a, b))


def regular_kronecker(parameter: Optional[int], n: int, algebra: AlgebraSpec) -> Representation:
    """R_{lambda,n}: ``a = I``, ``b = lambda I + J``; ``parameter=None`` is lambda = inf."""
    nilpotent = fp.zeros(n, n)
    for i in range(n - 1):
        nilpotent[i, i + 1] = 1
    if parameter is None:
        return Representation(algebra, (n, n), (nilpotent, fp.identity(n)))
    shifted = (parameter * fp.identity(n) + nilpotent) % algebra.p
    return Representation(algebra, (n, n), (fp.identity(n), shifted))


def projective_line(p: int) -> List[Optional[int]]:
    """The points of P^1(F_p): ``0..p-1`` then ``None`` for infinity."""
    return list(range(p)) + [None]


def kronecker_family(max_n: int, p: int = 2) -> List[Representation]:
    """P_n, I_n for ``n <= max_n`` and R_{lambda,1} for lambda in P^1(F_p).

    Over F_p further regular indecomposables with n1 = n2 come from closed
    points of degree >= 2 (the dims-(2,2) module over F_2 with ``b`` the
    companion matrix of x^2+x+1); brute-force enumeration finds them, this
    parametrization does not.
    """
    if max_n > MAX_KRONECKER_N:
        raise BoundExceeded(f"Kronecker family supports max_n <= {MAX_KRONECKER_N}",
                            total=max_n, bound=MAX_KRONECKER_N)
    algebra = kronecker(p)
    modules = []
    for n in range(max_n + 1):
        modules.append(projective_kronecker(n, algebra))
        modules.append(injective_kronecker(n, algebra))
    if max_n >= 1:
        modules.extend(regular_kronecker(point, 1, algebra) for point in projective_line(p))
    for module in modules:
        if not is_indecomposable(module):
            raise InternalAssertion(f"Catalog module of dims {module.dims} is decomposable")
    return sort_canonically(modules)


def catalog_indecomposables(algebra: AlgebraSpec) -> Optional[List[Representation]]:
    """Complete indecomposable list when the catalog classifies the algebra."""
    orientation = type_a_orientation(algebra)
    if orientation is None:
        return None
    return An_intervals(algebra.n, orientation, algebra.p)


def is_representation_finite(algebra: AlgebraSpec) -> bool:
    return type_a_orientation(algebra) is not None


def covering_bound(algebra: AlgebraSpec) -> Optional[tuple]:
    """A bound containing every indecomposable, for representation-finite catalog algebras."""
    if type_a_orientation(algebra) is None:
        return None
    return (1,) * algebra.n
