import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from quiver_stability.catalog.builtins import builtin
from quiver_stability.core.exceptions import (
    NotSemistable, OutOfUniverse, ParseError, ValidationError, ZeroObject,
)
from quiver_stability.repcore.homs import hom_dimension
from quiver_stability.repcore.representation import (
    direct_sum, from_lists, simple_representation, zero_representation,
)
from quiver_stability.stability.functions import (
    LinearCharge, SlopeFunction, TableEntry, TableFunction, seesaw_holds,
)
from quiver_stability.stability.parser import parse_stability
from quiver_stability.stability.phase import PhaseValue, parse_phase
from quiver_stability.stability.semistability import (
    Direction, KingStatus, extremal_destabilizer, hn_filtration, hn_filtration_by_quotients,
    is_semistable, is_semistable_by_quotients, is_stable, king_semistable, phase, seesaw_violations,
    slice_simples, stable_factors, wide_slice,
)

from .conftest import FIXTURES


@pytest.fixture
def modules(a2):
    S1 = simple_representation(a2, 1)
    S2 = simple_representation(a2, 2)
    P1 = from_lists(a2, (1, 1), {"a1": [[1]]})
    return {"S1": S1, "S2": S2, "P1": P1, "S1+S2": direct_sum(S1, S2)}


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
positives = st.fractions(min_value=Fraction(1, 6), max_value=5, max_denominator=6)
dims = st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any)


class TestPhaseValue:

    def test_order(self):
        assert PhaseValue(1) < PhaseValue(1, 1) < PhaseValue(2) < PhaseValue.infinity()
        assert PhaseValue.infinity() < PhaseValue.infinity(1)

    @pytest.mark.parametrize("text, expected", [
        ("3/4", PhaseValue(Fraction(3, 4))),
        ("inf", PhaseValue.infinity()),
        ("1*", PhaseValue(1, 1)),
        ("1*2", PhaseValue(1, 2)),
        ("-2", PhaseValue(-2)),
    ])
    def test_parse(self, text, expected):
        assert parse_phase(text) == expected

    def test_str(self):
        assert str(PhaseValue(Fraction(1, 2))) == "1/2"
        assert str(PhaseValue(1, 1)) == "1*1"
        assert str(PhaseValue.infinity()) == "inf"

    @pytest.mark.parametrize("text", ["x", "1/0", "1*a"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_phase(text)

    def test_seesaw(self):
        low, mid, high = PhaseValue(0), PhaseValue(1), PhaseValue(2)
        assert seesaw_holds(low, mid, high)
        assert seesaw_holds(high, mid, low)
        assert seesaw_holds(mid, mid, mid)
        assert not seesaw_holds(low, high, mid)


class TestStabilityFunctions:

    @settings(max_examples=80, deadline=None)
    @given(a=st.tuples(rationals, rationals), b=st.tuples(positives, positives),
           first=dims, second=dims)
    def test_charge_key_follows_argument(self, a, b, first, second):
        """The phase order matches the order of arg Z for Z = -<a,m> + i<b,m>."""
        sf = LinearCharge(a, b)

        def argument(m):
            real = -float(sum(x * d for x, d in zip(a, m)))
            imag = float(sum(x * d for x, d in zip(b, m)))
            return math.atan2(imag, real)

        left, right = sf.phase_of_dims(first), sf.phase_of_dims(second)
        assume(abs(argument(first) - argument(second)) > 1e-9)
        assert (left < right) == (argument(first) < argument(second))

    def test_charge_needs_positive_b(self):
        with pytest.raises(ValidationError):
            LinearCharge((1, 0), (1, 0))

    def test_slope_undefined_on_a_simple(self):
        with pytest.raises(ValidationError):
            SlopeFunction((0, 1), (0, 0))

    def test_slope_infinite_phase(self, modules):
        sf = SlopeFunction((1, 0), (0, 1))
        assert sf.phase(modules["S1"]).is_infinite

    def test_zero_module_has_no_phase(self, a2):
        with pytest.raises(ZeroObject):
            LinearCharge((0, 0), (1, 1)).phase(zero_representation(a2))

    def test_table_rejects_seesaw_violation(self, modules):
        entries = [TableEntry("S2", modules["S2"], PhaseValue(Fraction(1, 2))),
                   TableEntry("P1", modules["P1"], PhaseValue(Fraction(1, 4))),
                   TableEntry("S1", modules["S1"], PhaseValue(Fraction(3, 4)))]
        with pytest.raises(ValidationError):
            TableFunction(entries)
        sf = TableFunction(entries, validate=False)
        assert len(seesaw_violations(sf, modules["P1"])) == 1

    def test_table_lookup_outside(self, modules):
        sf = TableFunction([TableEntry("S1", modules["S1"], PhaseValue(0))])
        with pytest.raises(OutOfUniverse):
            sf.phase(modules["S2"])

    def test_table_rejects_repeated_class(self, modules):
        with pytest.raises(ValidationError):
            TableFunction([TableEntry("a", modules["S1"], PhaseValue(0)),
                           TableEntry("b", modules["S1"], PhaseValue(1))])


class TestParser:

    def test_charge(self, a2):
        sf = parse_stability("charge a=1,-1/2 b=1,1", a2)
        assert sf.describe() == {"kind": "charge", "a": ["1", "-1/2"], "b": ["1", "1"]}

    def test_slope(self, a2):
        assert parse_stability("slope num=1,0 den=0,1", a2).kind == "slope"

    def test_table_file(self, a2, a2_universe, modules):
        sf = parse_stability("table a2-slope.table", a2, a2_universe,
                             base_dir=FIXTURES / "tables")
        assert sf.phase(modules["P1"]) == PhaseValue(Fraction(1, 2))
        assert sf.phase(modules["S1"]) == PhaseValue(Fraction(3, 4))

    def test_path_file(self, a2, a2_universe, modules):
        sf = parse_stability("path a2-mgs3.path", a2, a2_universe, base_dir=FIXTURES / "paths")
        assert sf.phase(modules["S2"]) == PhaseValue(Fraction(1, 4))

    def test_table_needs_universe(self, a2):
        with pytest.raises(ValidationError):
            parse_stability("table a2-slope.table", a2)

    @pytest.mark.parametrize("text", ["", "charge a=1,1", "charge a=1,1 c=1,1", "wave x=1"])
    def test_malformed(self, a2, text):
        with pytest.raises(ParseError):
            parse_stability(text, a2)

    def test_wrong_length(self, a2):
        with pytest.raises(ValidationError):
            parse_stability("charge a=1 b=1,1", a2)

    def test_starred(self, kronecker, kronecker_universe):
        sf = parse_stability("starred s=0,inf", kronecker, kronecker_universe)
        phases = {name: sf.phase(M) for name, M in
                  zip(kronecker_universe.ids, kronecker_universe.indecomposables)}
        assert phases["R[0]1"] == phases["R[inf]1"] == PhaseValue(1)
        assert phases["R[1]1"] == PhaseValue(1, 1)
        assert sf.notes == ()

    def test_starred_empty_s(self, kronecker, kronecker_universe):
        sf = parse_stability("starred s=", kronecker, kronecker_universe)
        assert all(entry.phase != PhaseValue(1) for entry in sf.entries)

    @pytest.mark.parametrize("text, error", [
        ("starred s=0 higher=maybe", ParseError),
        ("starred", ParseError),
        ("starred s=7", ValidationError),
        ("starred s=zero", ValidationError),
    ])
    def test_starred_invalid(self, kronecker, kronecker_universe, text, error):
        with pytest.raises(error):
            parse_stability(text, kronecker, kronecker_universe)

    def test_starred_needs_kronecker(self, a2, a2_universe):
        with pytest.raises(ValidationError):
            parse_stability("starred s=0", a2, a2_universe)


class TestSemistability:

    def test_projective_is_stable(self, modules):
        sf = LinearCharge((1, 0), (1, 1))
        assert is_stable(sf, modules["P1"])
        assert is_semistable_by_quotients(sf, modules["P1"])

    def test_projective_destabilized_by_its_socle(self, modules):
        sf = LinearCharge((0, 1), (1, 1))
        assert not is_semistable(sf, modules["P1"])
        assert not is_semistable_by_quotients(sf, modules["P1"])

    def test_semistable_not_stable(self, modules):
        sf = LinearCharge((0, 0), (1, 1))
        M = modules["S1+S2"]
        assert is_semistable(sf, M)
        assert not is_stable(sf, M)

    def test_extremal_destabilizers(self, modules):
        sf = LinearCharge((0, 1), (1, 1))
        quotient = extremal_destabilizer(sf, modules["P1"], Direction.QUOTIENT)
        subobject = extremal_destabilizer(sf, modules["P1"], Direction.SUBOBJECT)
        assert quotient.object.dims == (1, 0)
        assert quotient.phase == PhaseValue(0)
        assert subobject.object.dims == (0, 1)
        assert subobject.phase == PhaseValue(1)

    def test_king(self, modules):
        theta = (1, -1)
        assert king_semistable(theta, modules["P1"]) is KingStatus.STABLE
        assert king_semistable(theta, modules["S1"]) is KingStatus.NOT
        assert king_semistable((0, 0), modules["P1"]) is KingStatus.SEMISTABLE
        with pytest.raises(ValidationError):
            king_semistable((1,), modules["P1"])

    @settings(max_examples=40, deadline=None)
    @given(a=st.tuples(rationals, rationals), b=st.tuples(positives, positives))
    def test_nonzero_maps_between_semistables_keep_the_phase(self, a2_universe, a, b):
        sf = LinearCharge(a, b)
        semistables = [M for M in a2_universe.indecomposables if is_semistable(sf, M)]
        for M in semistables:
            for N in semistables:
                if phase(sf, M) >= phase(sf, N) and hom_dimension(M, N) > 0:
                    assert phase(sf, M) == phase(sf, N)


class TestHarderNarasimhan:

    def test_filtration_of_unstable_projective(self, modules):
        sf = LinearCharge((0, 1), (1, 1))
        hn = hn_filtration(sf, modules["P1"])
        assert [L.dims for L in hn.chain] == [(0, 0), (0, 1), (1, 1)]
        assert [F.dims for F in hn.factors] == [(0, 1), (1, 0)]
        assert hn.phases == [PhaseValue(1), PhaseValue(0)]

    def test_semistable_module_has_one_factor(self, modules):
        sf = LinearCharge((1, 0), (1, 1))
        hn = hn_filtration(sf, modules["P1"])
        assert len(hn) == 1

    def test_both_constructions_agree(self, modules):
        sf = LinearCharge((0, 1), (1, 1))
        factors = hn_filtration_by_quotients(sf, modules["S1+S2"])
        assert [F.dims for F in factors] == [(0, 1), (1, 0)]
        assert [F.dims for F in hn_filtration(sf, modules["S1+S2"]).factors] == \
            [(0, 1), (1, 0)]

    @settings(max_examples=40, deadline=None)
    @given(a=st.tuples(rationals, rationals), b=st.tuples(positives, positives))
    def test_phases_strictly_decrease(self, a, b):
        sf = LinearCharge(a, b)
        algebra = builtin("A2")
        M = direct_sum(simple_representation(algebra, 1),
                       from_lists(algebra, (1, 1), {"a1": [[1]]}))
        hn = hn_filtration(sf, M)
        assert all(x > y for x, y in zip(hn.phases, hn.phases[1:]))
        assert all(is_semistable(sf, F) for F in hn.factors)
        assert hn.chain[-1].is_full


class TestStableFactors:

    def test_jordan_holder_of_semistable_projective(self, modules):
        sf = LinearCharge((0, 0), (1, 1))
        factors = stable_factors(sf, modules["P1"])
        assert sorted(F.dims for F in factors) == [(0, 1), (1, 0)]
        assert all(is_stable(sf, F) for F in factors)

    def test_needs_semistable(self, modules):
        with pytest.raises(NotSemistable):
            stable_factors(LinearCharge((0, 1), (1, 1)), modules["P1"])

    def test_wide_slice_and_its_simples(self, modules):
        sf = LinearCharge((0, 0), (1, 1))
        universe = [modules["S2"], modules["S1"], modules["P1"]]
        members = wide_slice(sf, PhaseValue(0), universe)
        assert len(members) == 3
        simples = slice_simples(sf, PhaseValue(0), members)
        assert sorted(M.dims for M in simples) == [(0, 1), (1, 0)]
