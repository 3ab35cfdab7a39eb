"""Quivers with relations and the algebra file format."""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import ParseError, ValidationError
from .field import FieldSpec

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

DimensionVector = Tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class QuiverSpec:
    """A finite quiver with vertices ``1..vertex_count``."""

    vertex_count: int
    arrows: Tuple[Arrow, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValidationError("A quiver needs at least one vertex",
                                  field="vertices", value=self.vertex_count)
        seen = set()
        for arrow in self.arrows:
            if not IDENTIFIER.match(arrow.name):
                raise ValidationError(f"Invalid arrow name: {arrow.name!r}",
                                      field="arrow", value=arrow.name)
            if arrow.name in seen:
                raise ValidationError(f"Duplicate arrow name: {arrow.name}",
                                      field="arrow", value=arrow.name)
            seen.add(arrow.name)
            for end in (arrow.source, arrow.target):
                if not 1 <= end <= self.vertex_count:
                    raise ValidationError(
                        f"Arrow {arrow.name} uses vertex {end} outside 1..{self.vertex_count}",
                        field="arrow", value=arrow.name)

    def arrow_named(self, name: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.name == name:
                return arrow
        raise KeyError(name)

    def arrow_index(self, name: str) -> int:
        for index, arrow in enumerate(self.arrows):
            if arrow.name == name:
                return index
        raise KeyError(name)


@dataclass(frozen=True)
class Relation:
    """An F_p-linear combination of paths, each path read left to right."""

    terms: Tuple[Tuple[int, Tuple[str, ...]], ...]

    def to_text(self) -> str:
        return " + ".join(f"{coefficient}*{'.'.join(path)}" for coefficient, path in self.terms)


@dataclass(frozen=True)
class AlgebraSpec:
    """A bound quiver algebra kQ/I over F_p.

    ``name`` records a catalog identity (``A2``, ``kronecker``...) used to
    pick fast paths and canonical module names; parsed files leave it empty.
    """

    quiver: QuiverSpec
    relations: Tuple[Relation, ...] = ()
    field: FieldSpec = FieldSpec()
    name: str = ""

    def __post_init__(self):
        for relation in self.relations:
            self._check_relation(relation)

    @property
    def n(self) -> int:
        return self.quiver.vertex_count

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self.quiver.arrows

    def path_ends(self, path: Sequence[str]) -> Tuple[int, int]:
        """Source and target vertex of a composable arrow sequence."""
        arrows = [self.quiver.arrow_named(name) for name in path]
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise ValidationError(
                    f"Arrows {first.name} and {second.name} are not composable",
                    field="relation", value=".".join(path))
        return arrows[0].source, arrows[-1].target

    def _check_relation(self, relation: Relation) -> None:
        if not relation.terms:
            raise ValidationError("Empty relation", field="relation")
        ends = set()
        for _, path in relation.terms:
            if len(path) < 2:
                raise ValidationError(
                    f"Relation paths must have length at least 2: {'.'.join(path)}",
                    field="relation", value=".".join(path))
            for name in path:
                try:
                    self.quiver.arrow_named(name)
                except KeyError:
                    raise ValidationError(f"Unknown arrow in relation: {name}",
                                          field="relation", value=name)
            ends.add(self.path_ends(path))
        if len(ends) != 1:
            raise ValidationError(
                "Relation paths must share one source and one target",
                field="relation", value=relation.to_text())

    def to_text(self) -> str:
        """Serialize in the algebra file format read by :func:`parse_algebra`."""
        lines = [f"field p={self.p}", f"vertices {self.n}"]
        lines += [f"arrow {a.name} {a.source} {a.target}" for a in self.arrows]
        lines += [f"relation {r.to_text()}" for r in self.relations]
        return "\n".join(lines) + "\n"


def parse_dimension_vector(text: str, n: Optional[int] = None) -> DimensionVector:
    """Parse ``d1,d2,...`` into a dimension vector."""
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"Invalid dimension vector: {text!r}", line=1, column=1)
    if any(entry < 0 for entry in entries):
        raise ValidationError("Dimension entries must be non-negative",
                              field="bound", value=text)
    if n is not None and len(entries) != n:
        raise ValidationError(f"Expected {n} entries, got {len(entries)}",
                              field="bound", value=text)
    return entries


def _parse_relation(body: str, line_no: int, column: int) -> Relation:
    terms = []
    for chunk in body.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("Empty relation term", line=line_no, column=column)
        if "*" in chunk:
            coefficient_text, path_text = chunk.split("*", 1)
            try:
                coefficient = int(coefficient_text.strip())
            except ValueError:
                raise ParseError(f"Invalid coefficient: {coefficient_text.strip()!r}",
                                 line=line_no, column=column)
        else:
            coefficient, path_text = 1, chunk
        path = tuple(part.strip() for part in path_text.strip().split("."))
        if not all(IDENTIFIER.match(part) for part in path):
            raise ParseError(f"Invalid path: {path_text.strip()!r}",
                             line=line_no, column=column)
        terms.append((coefficient, path))
    return Relation(tuple(terms))


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse an algebra spec document.

    Raises:
        ParseError: On unknown directives or malformed tokens.
        ValidationError: When the parsed quiver or relations violate an invariant.
    """
    p: Optional[int] = None
    vertex_count: Optional[int] = None
    arrows: List[Arrow] = []
    raw_relations: List[Relation] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = line.split()
        directive = tokens[0]
        column = line.index(directive) + 1
        rest_column = column + len(directive) + 1

        if directive == "field":
            match = re.fullmatch(r"p=(\d+)", "".join(tokens[1:]))
            if not match:
                raise ParseError("Expected 'field p=<prime>'", line=line_no, column=rest_column)
            p = int(match.group(1))
        elif directive == "vertices":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("Expected 'vertices <count>'", line=line_no, column=rest_column)
            vertex_count = int(tokens[1])
        elif directive == "arrow":
            if len(tokens) != 4 or not tokens[2].isdigit() or not tokens[3].isdigit():
                raise ParseError("Expected 'arrow <name> <source> <target>'",
                                 line=line_no, column=rest_column)
            arrows.append(Arrow(tokens[1], int(tokens[2]), int(tokens[3])))
        elif directive == "relation":
            body = line[line.index(directive) + len(directive):]
            if not body.strip():
                raise ParseError("Empty relation", line=line_no, column=rest_column)
            raw_relations.append(_parse_relation(body, line_no, rest_column))
        else:
            raise ParseError(f"Unknown directive: {directive}", line=line_no, column=column)

    if vertex_count is None:
        raise ParseError("Missing 'vertices' line", line=1, column=1)

    field_spec = FieldSpec(p if p is not None else 2)
    relations = tuple(
        Relation(tuple((c % field_spec.p, path) for c, path in r.terms)) for r in raw_relations
    )
    algebra = AlgebraSpec(QuiverSpec(vertex_count, tuple(arrows)), relations, field_spec)
    logger.debug(f"Parsed algebra with {vertex_count} vertices and {len(arrows)} arrows")
    return algebra


def load_algebra(source: Union[str, Path], p: Optional[int] = None) -> AlgebraSpec:
    """Load ``builtin:<id>`` or an algebra file; ``p`` overrides builtin fields."""
    text = str(source)
    if text.startswith("builtin:"):
        from ..catalog.builtins import builtin
        return builtin(text[len("builtin:"):], p=p if p is not None else 2)
    path = Path(source)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read algebra file {path}: {e}", line=0, column=0)
    return parse_algebra(content)


def dims_leq(dims: Sequence[int], bound: Sequence[int]) -> bool:
    return all(d <= b for d, b in zip(dims, bound))


def vertex_paths(algebra: AlgebraSpec) -> Dict[int, set]:
    """Vertices reachable from each vertex along directed paths (itself included)."""
    reach = {v: {v} for v in range(1, algebra.n + 1)}
    changed = True
    while changed:
        changed = False
        for arrow in algebra.arrows:
            for v in reach:
                if arrow.source in reach[v] and arrow.target not in reach[v]:
                    reach[v].add(arrow.target)
                    changed = True
    return reach
