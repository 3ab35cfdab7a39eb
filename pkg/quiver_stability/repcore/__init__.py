"""Exact representation theory of bound quivers over F_p."""

from .algebra import (AlgebraSpec, Arrow, DimensionVector, QuiverSpec, Relation,
                      load_algebra, parse_algebra, parse_dimension_vector)
from .field import FieldSpec
from .homs import (find_isomorphism, hom_basis, hom_dimension, indecomposable_summands,
                   is_brick, is_indecomposable, is_isomorphic, iterate_hom)
from .indecomposables import decompose, enumerate_indecomposables, match_class
from .limits import DEFAULT_LIMITS, Limits
from .representation import (Morphism, Representation, SubmoduleEmbedding, base_change,
                             direct_sum, from_lists, identity_morphism, simple_representation,
                             zero_representation)
from .submodules import (enumerate_submodules, nonzero_submodules,
                         proper_nonzero_submodules, quotient_by)

__all__ = [
    "AlgebraSpec", "Arrow", "DimensionVector", "QuiverSpec", "Relation", "FieldSpec",
    "load_algebra", "parse_algebra", "parse_dimension_vector",
    "Representation", "Morphism", "SubmoduleEmbedding",
    "base_change", "direct_sum", "from_lists", "identity_morphism",
    "simple_representation", "zero_representation",
    "enumerate_submodules", "nonzero_submodules", "proper_nonzero_submodules", "quotient_by",
    "hom_basis", "hom_dimension", "iterate_hom", "find_isomorphism", "is_isomorphic",
    "is_indecomposable", "is_brick", "indecomposable_summands",
    "enumerate_indecomposables", "match_class", "decompose",
    "Limits", "DEFAULT_LIMITS",
]
