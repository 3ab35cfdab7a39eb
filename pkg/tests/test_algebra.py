import tempfile
from pathlib import Path

import pytest

from quiver_stability.core.exceptions import ParseError, UnknownBuiltin, ValidationError
from quiver_stability.repcore.algebra import (
    Arrow, QuiverSpec, dims_leq, load_algebra, parse_algebra, parse_dimension_vector,
    vertex_paths,
)

from .conftest import FIXTURES


class TestParseAlgebra:

    def test_parse_a3_with_relation(self):
        algebra = load_algebra(FIXTURES / "algebras" / "a3-rad2.quiver")
        assert algebra.n == 3
        assert algebra.p == 2
        assert [a.name for a in algebra.arrows] == ["a1", "a2"]
        assert len(algebra.relations) == 1
        assert algebra.relations[0].terms == ((1, ("a1", "a2")),)

    def test_round_trip_through_text(self):
        algebra = load_algebra(FIXTURES / "algebras" / "kronecker.quiver")
        again = parse_algebra(algebra.to_text())
        assert again.quiver == algebra.quiver
        assert again.p == algebra.p

    def test_field_defaults_to_two(self):
        assert parse_algebra("vertices 1\n").p == 2

    def test_unknown_directive_reports_position(self):
        with pytest.raises(ParseError) as exc:
            parse_algebra("vertices 2\n  edge a 1 2\n")
        assert exc.value.line == 2
        assert exc.value.column == 3

    def test_missing_vertices(self):
        with pytest.raises(ParseError):
            parse_algebra("field p=3\narrow a 1 2\n")

    def test_composite_field_rejected(self):
        with pytest.raises(ValidationError):
            parse_algebra("field p=4\nvertices 1\n")

    def test_arrow_outside_vertex_range(self):
        with pytest.raises(ValidationError):
            parse_algebra("vertices 2\narrow a 1 3\n")

    def test_duplicate_arrow(self):
        with pytest.raises(ValidationError):
            QuiverSpec(2, (Arrow("a", 1, 2), Arrow("a", 2, 1)))

    def test_relation_must_compose(self):
        with pytest.raises(ValidationError):
            parse_algebra("vertices 3\narrow a 1 2\narrow b 1 3\nrelation a.b\n")

    def test_relation_with_unknown_arrow(self):
        with pytest.raises(ValidationError):
            parse_algebra("vertices 3\narrow a 1 2\nrelation a.c\n")

    def test_relation_with_coefficients(self):
        text = ("field p=3\nvertices 3\narrow a 1 2\narrow b 2 3\narrow c 1 2\n"
                "arrow d 2 3\nrelation a.b + 2*c.d\n")
        algebra = parse_algebra(text)
        assert algebra.relations[0].terms == ((1, ("a", "b")), (2, ("c", "d")))

    def test_unreadable_file(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            with pytest.raises(ParseError):
                load_algebra(Path(temp_dir) / "missing.quiver")


class TestBuiltins:

    def test_builtin_prefix(self):
        algebra = load_algebra("builtin:A3:rl", p=3)
        assert algebra.name == "A3:rl"
        assert algebra.p == 3
        assert [(a.source, a.target) for a in algebra.arrows] == [(1, 2), (3, 2)]

    def test_unknown_builtin(self):
        with pytest.raises(UnknownBuiltin):
            load_algebra("builtin:D4")


class TestDimensionVectors:

    def test_parse(self):
        assert parse_dimension_vector("1,0,2", 3) == (1, 0, 2)

    def test_negative_entries(self):
        with pytest.raises(ValidationError):
            parse_dimension_vector("1,-1")

    def test_wrong_length(self):
        with pytest.raises(ValidationError):
            parse_dimension_vector("1,1", 3)

    def test_garbage(self):
        with pytest.raises(ParseError):
            parse_dimension_vector("1,x")

    def test_dims_leq(self):
        assert dims_leq((1, 0), (1, 1))
        assert not dims_leq((2, 0), (1, 1))

    def test_vertex_paths(self, a3):
        reach = vertex_paths(a3)
        assert reach[1] == {1, 2, 3}
        assert reach[3] == {3}
