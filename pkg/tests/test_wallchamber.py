from fractions import Fraction

import pytest

from quiver_stability.catalog.builtins import builtin
from quiver_stability.core.exceptions import InvalidPath, ParseError, RankUnsupported, ValidationError
from quiver_stability.repcore.representation import direct_sum, simple_representation
from quiver_stability.wallchamber.chambers import (
    chamber_torsion_classes, chambers_rank2, sort_by_angle,
)
from quiver_stability.wallchamber.cones import (
    enumerate_walls, is_wall, primitive, sample_cone_agreement, stability_space,
)
from quiver_stability.wallchamber.paths import (
    bridgeland_torsion, diagonal_path, induced_stability, king_agreement, load_path,
    parse_path, path_mgs_agreement, redtorsion_parameters, validate_red_path, verify_redtorsion,
)


class TestCones:

    def test_primitive(self):
        assert primitive((Fraction(2, 3), Fraction(-4, 3))) == (1, -2)
        assert primitive((0, 0)) == (0, 0)

    def test_simple_wall_is_a_line(self, a2_universe):
        U = a2_universe
        cone = stability_space(U.representative("S1"))
        assert cone.generators() == [(0, -1), (0, 1)]

    def test_projective_wall_is_a_ray(self, a2_universe):
        cone = stability_space(a2_universe.representative("P1"))
        assert cone.generators() == [(1, -1)]
        assert cone.contains((2, -2))
        assert not cone.contains((-1, 1))

    def test_semisimple_sum_is_not_a_wall(self, a2):
        M = direct_sum(simple_representation(a2, 1), simple_representation(a2, 2))
        assert not is_wall(M)

    def test_rank_four_unsupported(self):
        with pytest.raises(RankUnsupported):
            is_wall(simple_representation(builtin("A4"), 1))

    def test_sampled_king_agreement(self, a2_universe):
        for name in a2_universe.ids:
            assert sample_cone_agreement(a2_universe.representative(name), 200, seed=3) == []


class TestWalls:

    def test_a2_walls(self, a2):
        walls = enumerate_walls(a2, (1, 1))
        assert len(walls) == 3
        assert sorted(w.is_line for w in walls) == [False, True, True]

    def test_kronecker_regulars_share_a_wall(self, kronecker):
        walls = enumerate_walls(kronecker, (1, 1))
        assert len(walls) == 3
        assert sorted(w.multiplicity for w in walls) == [1, 1, 3]

    def test_a3_walls_are_rank_three(self, a3):
        walls = enumerate_walls(a3, (1, 1, 1))
        assert len(walls) == 6
        assert all(w.cone.ambient_rank == 3 for w in walls)


class TestChambers:

    def test_sort_by_angle(self):
        assert sort_by_angle([(0, -1), (1, -1), (-1, 0), (1, 0), (0, 1)]) == \
            [(1, 0), (0, 1), (-1, 0), (0, -1), (1, -1)]

    def test_a2_chambers(self, a2, a2_universe):
        chambers = chambers_rank2(enumerate_walls(a2, (1, 1)))
        assert len(chambers) == 5
        classes = chamber_torsion_classes(chambers, a2_universe)
        assert len({T.members for T in classes}) == 5

    def test_chamber_interiors(self, a2):
        chambers = chambers_rank2(enumerate_walls(a2, (1, 1)))
        assert chambers[0].to_dict() == {"start": [1, 0], "end": [0, 1], "interior": [1, 1]}

    def test_no_walls_is_one_chamber(self):
        (chamber,) = chambers_rank2([])
        assert chamber.interior_point == (1, 1)

    def test_rank_three_rejected(self, a3):
        with pytest.raises(RankUnsupported):
            chambers_rank2(enumerate_walls(a3, (1, 1, 1)))


class TestRedPaths:

    def test_parse_and_evaluate(self, path_file):
        path = load_path(path_file("a2-mgs3"), 2)
        assert path.rank == 2
        assert path.at(Fraction(1, 4)) == (1, 0)
        assert path.zero_of((1, 1)) == Fraction(1, 2)
        assert parse_path(path.to_text()) == path

    def test_diagonal(self, path_file):
        assert load_path(path_file("a2-diagonal")) == diagonal_path(2)

    @pytest.mark.parametrize("text", ["0 1 1\n", "0 1 1\n1 1 -1\n", "1 -1 -1\n0 1 1\n"])
    def test_bad_breakpoints(self, text):
        with pytest.raises(ValidationError):
            parse_path(text)

    def test_wrong_width(self):
        with pytest.raises(ParseError) as exc:
            parse_path("0 1 1\n1 -1\n", 2)
        assert exc.value.line == 2

    def test_valid_path_report(self, a2_universe, path_file):
        report = validate_red_path(load_path(path_file("a2-mgs3")), a2_universe)
        assert report.valid
        assert report.phases == {"S2": Fraction(1, 4), "P1": Fraction(1, 2),
                                 "S1": Fraction(3, 4)}
        assert [c.t for c in report.crossings] == [Fraction(1, 4), Fraction(1, 2),
                                                   Fraction(3, 4)]
        assert all(c.genuine_wall for c in report.crossings)
        assert report.dgeneric["condition1"] and report.dgeneric["condition2"]
        assert all(entry["transversal"] for entry in report.transversality)

    def test_interval_zero_is_invalid(self, a2_universe, path_file):
        path = load_path(path_file("a2-interval"))
        report = validate_red_path(path, a2_universe)
        assert not report.valid
        assert {"dims": [1, 0], "zeros": [], "intervals": [["1/3", "2/3"]]} in report.violations
        with pytest.raises(InvalidPath):
            induced_stability(path, a2_universe)

    def test_diagonal_fails_the_genericity_condition(self, a2_universe):
        report = validate_red_path(diagonal_path(2), a2_universe)
        assert report.valid
        (crossing,) = report.crossings
        assert sorted(crossing.semistable) == ["P1", "S1", "S2"]
        assert report.dgeneric["condition2_failures"] == ["1/2"]

    def test_rank_mismatch(self, a3_universe, path_file):
        with pytest.raises(ValidationError):
            validate_red_path(load_path(path_file("a2-mgs3")), a3_universe)

    def test_king_agreement(self, a2_universe, path_file):
        path = load_path(path_file("a2-mgs3"))
        sf = induced_stability(path, a2_universe, verify=False)
        assert king_agreement(sf, path, a2_universe) == []


class TestPathTorsion:

    def test_bridgeland_torsion(self, a2_universe):
        assert sorted(bridgeland_torsion((1, -1), a2_universe).names) == ["P1", "S1"]

    def test_redtorsion_at_three_eighths(self, a2_universe, path_file):
        path = load_path(path_file("a2-mgs3"))
        assert verify_redtorsion(path, Fraction(3, 8), a2_universe).ok
        assert sorted(bridgeland_torsion(path.at(Fraction(3, 8)), a2_universe).names) == \
            ["P1", "S1"]

    def test_redtorsion_everywhere(self, a3_universe, path_file):
        path = load_path(path_file("a3-generic"))
        sf = induced_stability(path, a3_universe)
        for t in redtorsion_parameters(path, a3_universe):
            assert verify_redtorsion(path, t, a3_universe, sf).ok

    def test_redtorsion_parameters(self, a2_universe, path_file):
        path = load_path(path_file("a2-mgs3"))
        assert redtorsion_parameters(path, a2_universe) == [
            Fraction(0), Fraction(1, 4), Fraction(3, 8), Fraction(1, 2), Fraction(5, 8),
            Fraction(3, 4), Fraction(1)]

    def test_mgs_agreement(self, a2_universe, path_file):
        assert path_mgs_agreement(load_path(path_file("a2-mgs3")), a2_universe) == (True, True)
        assert path_mgs_agreement(diagonal_path(2), a2_universe) == (False, False)

    def test_kronecker_regulars_cross_together(self, kronecker_universe, path_file):
        report = validate_red_path(load_path(path_file("kronecker-cross")), kronecker_universe)
        assert report.valid
        regulars = [c for c in report.crossings if c.t == Fraction(1, 2)]
        assert len(regulars[0].semistable) == 3
        assert report.phases["S2"] == Fraction(1, 4)
        assert report.dgeneric["condition2"]
