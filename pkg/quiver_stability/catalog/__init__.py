"""Built-in algebras, closed-form indecomposable families and module naming."""

from .builtins import (An_intervals, builtin, catalog_indecomposables, is_representation_finite,
                       kronecker, kronecker_family, projective_line, type_a)
from .naming import RegularParameter, module_id, regular_parameter, unique_ids

__all__ = [
    "An_intervals", "builtin", "catalog_indecomposables", "is_representation_finite",
    "kronecker", "kronecker_family", "projective_line", "type_a",
    "RegularParameter", "module_id", "regular_parameter", "unique_ids",
]
