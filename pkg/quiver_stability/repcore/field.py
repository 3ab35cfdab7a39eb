"""Exact linear algebra over the prime field F_p.

Matrices are numpy ``int64`` arrays whose entries are kept in ``0..p-1``.
Subspaces of F_p^d are stored as ``d x r`` matrices whose columns are the
rows of the reduced row-echelon form of any spanning set, so every subspace
has exactly one stored basis (the canonical basis).
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from ..core.exceptions import ValidationError

DTYPE = np.int64


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for field characteristics."""
    if n <= 1:
        return False
    for i in range(2, int(math.isqrt(n)) + 1):
        if n % i == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The base field F_p."""

    p: int = 2

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValidationError(f"Field characteristic must be prime, got {self.p}",
                                  field="p", value=self.p)

    def elements(self) -> range:
        return range(self.p)


def reduce(mat, p: int) -> np.ndarray:
    """Return ``mat`` as an int64 array reduced modulo ``p``."""
    return np.asarray(mat, dtype=DTYPE) % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=DTYPE)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=DTYPE)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(mat: np.ndarray, p: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Reduced row-echelon form of ``mat`` over F_p and its pivot columns.

    Each pivot is normalized to 1 and its column cleared in every other row.
    The input is copied and never mutated.
    """
    mat = reduce(mat, p).copy()
    num_rows, num_cols = mat.shape
    pivots: List[int] = []
    row = 0
    for col in range(num_cols):
        if row >= num_rows:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot_row = int(candidates[0]) + row
        if pivot_row != row:
            mat[[row, pivot_row]] = mat[[pivot_row, row]]
        inv_pivot = pow(int(mat[row, col]), -1, p)
        mat[row] = (mat[row] * inv_pivot) % p
        for r in range(num_rows):
            if r != row and mat[r, col] != 0:
                mat[r] = (mat[r] - mat[r, col] * mat[row]) % p
        pivots.append(col)
        row += 1
    return mat, tuple(pivots)


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel of ``mat`` as the columns of the result.

    One basis vector per free column of the RREF, with a 1 in that free
    coordinate; the order follows the free columns.
    """
    num_cols = mat.shape[1]
    if mat.shape[0] == 0:
        return identity(num_cols)
    reduced, pivots = rref(mat, p)
    free = [c for c in range(num_cols) if c not in pivots]
    basis = zeros(num_cols, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-reduced[i, f]) % p
    return basis


def is_invertible(mat: np.ndarray, p: int) -> bool:
    n, m = mat.shape
    return n == m and rank(mat, p) == n


def inverse(mat: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p.

    Raises:
        ValueError: If the matrix is singular.
    """
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise ValueError("Matrix must be square to compute inverse.")
    reduced, _ = rref(np.hstack((reduce(mat, p), identity(n))), p)
    if not np.array_equal(reduced[:, :n], identity(n)):
        raise ValueError("Matrix is not invertible over F_p.")
    return reduced[:, n:] % p


def matrix_power(mat: np.ndarray, k: int, p: int) -> np.ndarray:
    result = identity(mat.shape[0])
    for _ in range(k):
        result = matmul(result, mat, p)
    return result


def canonical_basis(vectors: np.ndarray, p: int) -> np.ndarray:
    """Canonical column basis of the span of the columns of ``vectors``."""
    d = vectors.shape[0]
    if vectors.shape[1] == 0:
        return zeros(d, 0)
    reduced, pivots = rref(vectors.T, p)
    return reduced[: len(pivots)].T.copy()


def basis_pivots(basis: np.ndarray) -> Tuple[int, ...]:
    """Pivot rows of a canonical basis (first nonzero entry of each column)."""
    return tuple(int(np.nonzero(basis[:, k])[0][0]) for k in range(basis.shape[1]))


def coordinates(basis: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """Coordinates of vectors lying in the span of a canonical basis.

    The canonical basis carries an identity block on its pivot rows, so the
    coordinates are the pivot entries of each vector.
    """
    return vectors[list(basis_pivots(basis)), :]


def residual(basis: np.ndarray, vectors: np.ndarray, p: int) -> np.ndarray:
    """Component of ``vectors`` outside the span of a canonical basis.

    The result vanishes exactly when every column lies in the span.
    """
    if basis.shape[1] == 0:
        return reduce(vectors, p)
    return (vectors - basis @ coordinates(basis, vectors)) % p


def contains(basis: np.ndarray, vectors: np.ndarray, p: int) -> bool:
    return not residual(basis, vectors, p).any()


def quotient_maps(basis: np.ndarray, p: int) -> Tuple[np.ndarray, np.ndarray]:
    """Projection ``F^d -> F^d / span(basis)`` and a section of it.

    The quotient is identified with the coordinates at the non-pivot rows.
    Returns ``(projection, section)`` of shapes ``(d-r) x d`` and ``d x (d-r)``.
    """
    d = basis.shape[0]
    pivots = basis_pivots(basis)
    free = [i for i in range(d) if i not in pivots]
    eye = identity(d)
    if pivots:
        reducer = (eye - basis @ eye[list(pivots), :]) % p
    else:
        reducer = eye
    projection = reducer[free, :] % p
    section = eye[:, free]
    return projection, section


def encode(mat: np.ndarray) -> Tuple[int, ...]:
    """Flat tuple encoding used for deterministic ordering and hashing."""
    return tuple(int(x) for x in mat.flatten())


@lru_cache(maxsize=None)
def enumerate_subspaces(d: int, p: int) -> Tuple[np.ndarray, ...]:
    """Every subspace of F_p^d, one canonical basis each.

    Ordered by dimension, then lexicographically on the RREF encoding.
    """
    found = []
    for r in range(d + 1):
        for pivots in itertools.combinations(range(d), r):
            free_slots = [(i, j) for i, pc in enumerate(pivots)
                          for j in range(pc + 1, d) if j not in pivots]
            for values in itertools.product(range(p), repeat=len(free_slots)):
                rows = zeros(r, d)
                for i, pc in enumerate(pivots):
                    rows[i, pc] = 1
                for (i, j), v in zip(free_slots, values):
                    rows[i, j] = v
                found.append((r, encode(rows), rows.T.copy()))
    found.sort(key=lambda item: (item[0], item[1]))
    subspaces = tuple(item[2] for item in found)
    for basis in subspaces:
        basis.setflags(write=False)
    return subspaces
