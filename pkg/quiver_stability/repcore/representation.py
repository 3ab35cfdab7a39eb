"""Representations of bound quivers, morphisms and submodule embeddings."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import InvalidEmbedding, ValidationError
from . import field as fp
from .algebra import AlgebraSpec, DimensionVector

logger = logging.getLogger(__name__)


def _frozen(mat: np.ndarray) -> np.ndarray:
    mat.setflags(write=False)
    return mat


@dataclass(frozen=True, eq=False)
class Representation:
    """A module over a bound quiver algebra.

    ``matrices[k]`` is the matrix of the k-th arrow, of shape
    ``dims[target] x dims[source]`` (vertices are 1-based, ``dims`` 0-based).
    Equality and hashing are exact matrix equality, not isomorphism.
    """

    algebra: AlgebraSpec
    dims: DimensionVector
    matrices: Tuple[np.ndarray, ...]

    def __post_init__(self):
        algebra = self.algebra
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != algebra.n or any(d < 0 for d in dims):
            raise ValidationError(f"Dimension vector {dims} does not fit {algebra.n} vertices",
                                  field="dims", value=dims)
        if len(self.matrices) != len(algebra.arrows):
            raise ValidationError("One matrix per arrow is required", field="matrices",
                                  value=len(self.matrices))
        matrices = []
        for arrow, mat in zip(algebra.arrows, self.matrices):
            shape = (dims[arrow.target - 1], dims[arrow.source - 1])
            mat = fp.reduce(mat, algebra.p)
            if mat.size == 0:
                mat = fp.zeros(*shape)
            if mat.shape != shape:
                raise ValidationError(
                    f"Matrix of arrow {arrow.name} has shape {mat.shape}, expected {shape}",
                    field="matrices", value=arrow.name)
            matrices.append(_frozen(mat.copy()))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrices", tuple(matrices))
        for relation in algebra.relations:
            source, target = algebra.path_ends(relation.terms[0][1])
            total = fp.zeros(dims[target - 1], dims[source - 1])
            for coefficient, path in relation.terms:
                total = (total + coefficient * self.path_matrix(path)) % algebra.p
            if total.any():
                raise ValidationError(f"Relation {relation.to_text()} does not vanish",
                                      field="relations", value=relation.to_text())

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    def matrix(self, arrow_name: str) -> np.ndarray:
        return self.matrices[self.algebra.quiver.arrow_index(arrow_name)]

    def path_matrix(self, path: Sequence[str]) -> np.ndarray:
        """Matrix of a path applied left to right (first arrow acts first)."""
        first = self.algebra.quiver.arrow_named(path[0])
        result = fp.identity(self.dims[first.source - 1])
        for name in path:
            result = fp.matmul(self.matrix(name), result, self.p)
        return result

    @cached_property
    def key(self) -> Tuple:
        return (self.dims, tuple(fp.encode(m) for m in self.matrices))

    @cached_property
    def sort_key(self) -> Tuple:
        """Canonical order: total dimension, dimension vector, matrix encoding."""
        return (self.total_dim, self.dims, self.key[1])

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.algebra == other.algebra and self.key == other.key

    def __hash__(self):
        return hash((self.algebra, self.key))

    def __repr__(self):
        return f"Representation(dims={self.dims})"

    def to_dict(self) -> Dict:
        return {
            "dims": list(self.dims),
            "matrices": {arrow.name: mat.tolist()
                         for arrow, mat in zip(self.algebra.arrows, self.matrices)},
        }


@dataclass(frozen=True, eq=False)
class Morphism:
    """A module homomorphism given by one block per vertex.

    ``blocks[i]`` has shape ``target.dims[i] x source.dims[i]``.
    """

    source: Representation
    target: Representation
    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        p = self.source.p
        blocks = []
        for i, block in enumerate(self.blocks):
            shape = (self.target.dims[i], self.source.dims[i])
            block = fp.reduce(block, p)
            if block.size == 0:
                block = fp.zeros(*shape)
            if block.shape != shape:
                raise ValidationError(f"Block at vertex {i + 1} has shape {block.shape}, expected {shape}",
                                      field="blocks", value=i + 1)
            blocks.append(_frozen(block.copy()))
        if len(blocks) != self.source.algebra.n:
            raise ValidationError("One block per vertex is required", field="blocks")
        object.__setattr__(self, "blocks", tuple(blocks))
        for arrow, m_a, n_a in zip(self.source.algebra.arrows, self.source.matrices,
                                   self.target.matrices):
            lhs = fp.matmul(blocks[arrow.target - 1], m_a, p)
            rhs = fp.matmul(n_a, blocks[arrow.source - 1], p)
            if not np.array_equal(lhs, rhs):
                raise ValidationError(f"Blocks do not intertwine arrow {arrow.name}",
                                      field="blocks", value=arrow.name)

    @property
    def p(self) -> int:
        return self.source.p

    @property
    def is_zero(self) -> bool:
        return not any(block.any() for block in self.blocks)

    def compose(self, first: "Morphism") -> "Morphism":
        """``self o first``."""
        return Morphism(first.source, self.target,
                        tuple(fp.matmul(b, a, self.p) for b, a in zip(self.blocks, first.blocks)))

    def ranks(self) -> Tuple[int, ...]:
        return tuple(fp.rank(block, self.p) for block in self.blocks)

    @property
    def is_mono(self) -> bool:
        return self.ranks() == self.source.dims

    @property
    def is_epi(self) -> bool:
        return self.ranks() == self.target.dims

    @property
    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_mono

    def kernel(self) -> "SubmoduleEmbedding":
        return SubmoduleEmbedding(self.source, tuple(
            fp.canonical_basis(fp.nullspace(block, self.p), self.p) for block in self.blocks))

    def image(self) -> "SubmoduleEmbedding":
        return SubmoduleEmbedding(self.target, tuple(
            fp.canonical_basis(block, self.p) for block in self.blocks))

    def cokernel(self) -> Representation:
        from .submodules import quotient_by
        return quotient_by(self.target, self.image())[0]


def identity_morphism(rep: Representation) -> Morphism:
    return Morphism(rep, rep, tuple(fp.identity(d) for d in rep.dims))


def zero_morphism(source: Representation, target: Representation) -> Morphism:
    return Morphism(source, target, tuple(fp.zeros(t, s) for s, t in zip(source.dims, target.dims)))


def combine(basis: Sequence[Morphism], coefficients: Iterable[int],
            source: Representation, target: Representation) -> Morphism:
    """The linear combination ``sum c_k * basis[k]``."""
    p = source.p
    blocks = [fp.zeros(t, s) for s, t in zip(source.dims, target.dims)]
    for c, morphism in zip(coefficients, basis):
        if c:
            blocks = [(acc + c * block) % p for acc, block in zip(blocks, morphism.blocks)]
    return Morphism(source, target, tuple(blocks))


@dataclass(frozen=True, eq=False)
class SubmoduleEmbedding:
    """An arrow-stable tuple of subspaces, stored in canonical bases."""

    ambient: Representation
    bases: Tuple[np.ndarray, ...]

    def __post_init__(self):
        p = self.ambient.p
        if len(self.bases) != self.ambient.algebra.n:
            raise InvalidEmbedding("One subspace basis per vertex is required")
        bases = []
        for dim, basis in zip(self.ambient.dims, self.bases):
            basis = fp.reduce(basis, p)
            if basis.size == 0:
                basis = fp.zeros(dim, 0)
            if basis.shape[0] != dim:
                raise InvalidEmbedding(f"Basis has {basis.shape[0]} rows, expected {dim}")
            bases.append(_frozen(fp.canonical_basis(basis, p)))
        object.__setattr__(self, "bases", tuple(bases))
        for arrow, mat in zip(self.ambient.algebra.arrows, self.ambient.matrices):
            image = fp.matmul(mat, bases[arrow.source - 1], p)
            if not fp.contains(bases[arrow.target - 1], image, p):
                raise InvalidEmbedding(f"Subspaces are not stable under arrow {arrow.name}",
                                       arrow=arrow.name)

    @property
    def dims(self) -> DimensionVector:
        return tuple(basis.shape[1] for basis in self.bases)

    @property
    def is_zero(self) -> bool:
        return sum(self.dims) == 0

    @property
    def is_full(self) -> bool:
        return self.dims == self.ambient.dims

    @cached_property
    def key(self) -> Tuple:
        return (self.dims, tuple(fp.encode(basis.T) for basis in self.bases))

    def __eq__(self, other):
        if not isinstance(other, SubmoduleEmbedding):
            return NotImplemented
        return self.ambient == other.ambient and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"SubmoduleEmbedding(dims={self.dims} in {self.ambient.dims})"

    def contains(self, other: "SubmoduleEmbedding") -> bool:
        p = self.ambient.p
        return all(fp.contains(mine, theirs, p) for mine, theirs in zip(self.bases, other.bases))

    @cached_property
    def representation(self) -> Representation:
        """The submodule as a module in its own right, in its basis coordinates."""
        p = self.ambient.p
        matrices = []
        for arrow, mat in zip(self.ambient.algebra.arrows, self.ambient.matrices):
            source_basis = self.bases[arrow.source - 1]
            target_basis = self.bases[arrow.target - 1]
            if source_basis.shape[1] == 0 or target_basis.shape[1] == 0:
                matrices.append(fp.zeros(target_basis.shape[1], source_basis.shape[1]))
                continue
            matrices.append(fp.coordinates(target_basis, fp.matmul(mat, source_basis, p)))
        return Representation(self.ambient.algebra, self.dims, tuple(matrices))

    def inclusion(self) -> Morphism:
        return Morphism(self.representation, self.ambient, self.bases)


def whole(rep: Representation) -> SubmoduleEmbedding:
    return SubmoduleEmbedding(rep, tuple(fp.identity(d) for d in rep.dims))


def zero_submodule(rep: Representation) -> SubmoduleEmbedding:
    return SubmoduleEmbedding(rep, tuple(fp.zeros(d, 0) for d in rep.dims))


def zero_representation(algebra: AlgebraSpec) -> Representation:
    return Representation(algebra, (0,) * algebra.n,
                          tuple(fp.zeros(0, 0) for _ in algebra.arrows))


def simple_representation(algebra: AlgebraSpec, vertex: int) -> Representation:
    """The simple module S_vertex (1-based vertex)."""
    dims = tuple(1 if v == vertex else 0 for v in range(1, algebra.n + 1))
    return Representation(algebra, dims, tuple(
        fp.zeros(dims[a.target - 1], dims[a.source - 1]) for a in algebra.arrows))


def direct_sum(*reps: Representation) -> Representation:
    """Block-diagonal direct sum; at least one summand is required."""
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    algebra = reps[0].algebra
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(algebra.n))
    matrices = []
    for k, arrow in enumerate(algebra.arrows):
        mat = fp.zeros(dims[arrow.target - 1], dims[arrow.source - 1])
        row = col = 0
        for r in reps:
            block = r.matrices[k]
            mat[row:row + block.shape[0], col:col + block.shape[1]] = block
            row += block.shape[0]
            col += block.shape[1]
        matrices.append(mat)
    return Representation(algebra, dims, tuple(matrices))


def base_change(rep: Representation, changes: Sequence[np.ndarray]) -> Representation:
    """Isomorphic copy ``g_t M_a g_s^{-1}`` for invertible vertex matrices ``g``."""
    p = rep.p
    inverses = [fp.inverse(g, p) if g.size else g for g in changes]
    matrices = []
    for arrow, mat in zip(rep.algebra.arrows, rep.matrices):
        g_t = changes[arrow.target - 1]
        g_s_inv = inverses[arrow.source - 1]
        if mat.size == 0:
            matrices.append(mat)
        else:
            matrices.append(fp.matmul(fp.matmul(g_t, mat, p), g_s_inv, p))
    return Representation(rep.algebra, rep.dims, tuple(matrices))


def sort_canonically(reps: Iterable[Representation]) -> List[Representation]:
    return sorted(reps, key=lambda r: r.sort_key)


def from_lists(algebra: AlgebraSpec, dims: Sequence[int],
               matrices: Optional[Dict[str, list]] = None) -> Representation:
    """Build a representation from nested lists keyed by arrow name."""
    matrices = matrices or {}
    built = []
    for arrow in algebra.arrows:
        shape = (dims[arrow.target - 1], dims[arrow.source - 1])
        if arrow.name in matrices:
            built.append(np.array(matrices[arrow.name], dtype=fp.DTYPE).reshape(shape))
        else:
            built.append(fp.zeros(*shape))
    return Representation(algebra, tuple(dims), tuple(built))
