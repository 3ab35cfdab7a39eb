"""Canonical names for indecomposables: ``S1``, ``P1``, ``M[1,3]``, ``R[0]1``."""

import itertools
import logging
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from ..repcore import field as fp
from ..repcore.algebra import vertex_paths
from ..repcore.representation import Representation
from .builtins import KRONECKER, type_a_orientation

logger = logging.getLogger(__name__)


class RegularParameter(NamedTuple):
    """A closed point of P^1(F_p): ``label`` is ``0..p-1``, ``inf`` or a monic polynomial."""

    label: str
    multiplicity: int
    degree: int


def _polynomial_text(coefficients: Sequence[int]) -> str:
    """Monic polynomial, coefficients low to high, as ``x^2+x+1``."""
    terms = []
    for power in range(len(coefficients) - 1, -1, -1):
        c = coefficients[power]
        if not c:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            monomial = "x" if power == 1 else f"x^{power}"
            terms.append(monomial if c == 1 else f"{c}{monomial}")
    return "+".join(terms)


def _evaluate(coefficients: Sequence[int], mat: np.ndarray, p: int) -> np.ndarray:
    n = mat.shape[0]
    result = fp.zeros(n, n)
    for c in reversed(coefficients):
        result = (fp.matmul(result, mat, p) + c * fp.identity(n)) % p
    return result


def _has_root(coefficients: Sequence[int], p: int) -> bool:
    return any(sum(c * x ** k for k, c in enumerate(coefficients)) % p == 0 for x in range(p))


def irreducible_polynomials(degree: int, p: int) -> List[List[int]]:
    """Monic irreducibles of degree 2 or 3 over F_p (rootless is enough there)."""
    found = []
    for lower in itertools.product(range(p), repeat=degree):
        coefficients = list(lower) + [1]
        if not _has_root(coefficients, p):
            found.append(coefficients)
    return found


def _nilpotent(mat: np.ndarray, p: int) -> bool:
    return not fp.matrix_power(mat, mat.shape[0], p).any()


def regular_parameter(rep: Representation) -> Optional[RegularParameter]:
    """The point of P^1 a regular Kronecker module of dims (n, n) lies over.

    Returns None when ``rep`` is not supported at a single closed point of
    degree <= 3 (for example a sum of regulars over different points).
    """
    if rep.algebra.name != KRONECKER or rep.dims[0] != rep.dims[1] or not rep.dims[0]:
        return None
    n, p = rep.dims[0], rep.p
    a, b = rep.matrix("a"), rep.matrix("b")
    if fp.is_invertible(a, p):
        operator = fp.matmul(fp.inverse(a, p), b, p)
        for value in range(p):
            if _nilpotent((operator - value * fp.identity(n)) % p, p):
                return RegularParameter(str(value), n, 1)
        for degree in (2, 3):
            if n % degree:
                continue
            for coefficients in irreducible_polynomials(degree, p):
                if _nilpotent(_evaluate(coefficients, operator, p), p):
                    return RegularParameter(_polynomial_text(coefficients), n // degree, degree)
        return None
    if fp.is_invertible(b, p) and _nilpotent(fp.matmul(a, fp.inverse(b, p), p), p):
        return RegularParameter("inf", n, 1)
    return None


def module_id(rep: Representation) -> str:
    """Catalog name of an indecomposable, or a dimension-vector name as a fallback."""
    if rep.is_zero:
        return "0"
    algebra = rep.algebra
    if algebra.name == KRONECKER:
        n1, n2 = rep.dims
        if n2 == n1 + 1:
            return "S2" if n1 == 0 else f"P{n1}"
        if n1 == n2 + 1:
            return "S1" if n2 == 0 else f"I{n2}"
        parameter = regular_parameter(rep)
        if parameter is not None:
            return f"R[{parameter.label}]{parameter.multiplicity}"
    support = [v + 1 for v, d in enumerate(rep.dims) if d]
    if len(support) == 1 and rep.total_dim == 1:
        return f"S{support[0]}"
    if type_a_orientation(algebra) is not None and set(rep.dims) <= {0, 1}:
        reach = vertex_paths(algebra)
        span = set(support)
        for vertex in support:
            if reach[vertex] == span:
                return f"P{vertex}"
        for vertex in support:
            if {v for v in reach if vertex in reach[v]} == span:
                return f"I{vertex}"
        return f"M[{support[0]},{support[-1]}]"
    return "M(" + ",".join(str(d) for d in rep.dims) + ")"


def unique_ids(reps: Sequence[Representation]) -> List[str]:
    """``module_id`` per module, with ``#k`` suffixes on repeated names."""
    names = [module_id(rep) for rep in reps]
    seen = {}
    result = []
    for name in names:
        if names.count(name) > 1:
            seen[name] = seen.get(name, 0) + 1
            result.append(f"{name}#{seen[name]}")
        else:
            result.append(name)
    return result
