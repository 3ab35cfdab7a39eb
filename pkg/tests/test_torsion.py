from fractions import Fraction

import pytest

from quiver_stability.core.exceptions import OutOfUniverse, SearchSpaceExceeded, TruncationWarning
from quiver_stability.repcore.limits import Limits
from quiver_stability.repcore.representation import direct_sum, simple_representation
from quiver_stability.stability.functions import LinearCharge
from quiver_stability.stability.phase import PhaseValue
from quiver_stability.torsion.classes import (
    enumerate_torsion_classes, filt_closure, is_torsion_class, is_torsion_free_class,
    module_set, quotient_closure, semistables_at_least, torsion_pair_at, verify_torsion_pair,
)
from quiver_stability.torsion.sequences import (
    attained_phases, chain_of_torsion_classes, is_discrete, stables_at, verify_mgs,
)
from quiver_stability.torsion.universe import ModuleUniverse
from quiver_stability.wallchamber.paths import induced_stability, load_path


def by_name(U, *names):
    return module_set(U, [U.ids.index(name) for name in names])


@pytest.fixture
def path_stability(a2_universe, path_file):
    def build(name):
        return induced_stability(load_path(path_file(name), 2), a2_universe)
    return build


class TestModuleUniverse:

    def test_a2_window(self, a2_universe):
        U = a2_universe
        assert len(U) == 3
        assert U.exact
        assert [c.name for c in U.all_classes] == ["S2", "S1", "P1", "S2+S1"]

    def test_kronecker_window_is_not_exact(self, kronecker_universe):
        assert not kronecker_universe.exact

    def test_classify_and_representative(self, a2, a2_universe):
        U = a2_universe
        M = direct_sum(simple_representation(a2, 1), simple_representation(a2, 2))
        index = U.classify(M)
        assert U.all_classes[index].name == "S2+S1"
        assert U.representative("S2+S1").dims == (1, 1)
        with pytest.raises(KeyError):
            U.representative("P2")

    def test_class_outside_bound(self, a2_universe):
        with pytest.raises(OutOfUniverse):
            a2_universe.class_index((2, 2))

    def test_sequences_of_projective(self, a2_universe):
        U = a2_universe
        index = U.indecomposable_class(U.ids.index("P1"))
        quotients = {U.all_classes[i].name for i in U.quotient_classes(index)}
        assert quotients == {"P1", "S1"}

    def test_to_dict(self, a2_universe):
        data = a2_universe.to_dict()
        assert data["algebra"] == "A2"
        assert data["modules"][2] == {"id": "P1", "dims": [1, 1]}


class TestTorsionClasses:

    def test_a2_has_five(self, a2_universe):
        assert len(enumerate_torsion_classes(a2_universe)) == 5

    def test_a3_has_fourteen(self, a3_universe):
        assert len(enumerate_torsion_classes(a3_universe)) == 14

    def test_closure_checks(self, a2_universe):
        U = a2_universe
        assert is_torsion_class(by_name(U, "S1", "P1"))
        assert not is_torsion_class(by_name(U, "P1"))
        # S1 and S2 extend to P1.
        assert not is_torsion_class(by_name(U, "S1", "S2"))
        assert is_torsion_free_class(by_name(U, "S2"))
        assert not is_torsion_free_class(by_name(U, "P1"))

    def test_quotient_and_filt_closure(self, a2_universe):
        U = a2_universe
        assert sorted(quotient_closure(by_name(U, "P1")).names) == ["P1", "S1"]
        assert len(filt_closure(by_name(U, "S1", "S2"))) == 3
        assert sorted(filt_closure(by_name(U, "P1"), fac=True).names) == ["P1", "S1"]

    def test_oracle_cap(self, a2):
        U = ModuleUniverse(a2, (1, 1), Limits(oracle_max_indecomposables=2))
        with pytest.raises(SearchSpaceExceeded):
            enumerate_torsion_classes(U)

    def test_window_relative_results_warn(self, kronecker_universe):
        U = kronecker_universe
        with pytest.warns(TruncationWarning):
            closure = filt_closure(by_name(U, "S1"))
        assert closure.truncated


class TestTorsionPairs:

    def test_pair_at_midpoint(self, a2_universe, path_stability):
        U = a2_universe
        sf = path_stability("a2-mgs3")
        T, F = torsion_pair_at(sf, PhaseValue(Fraction(1, 2)), U)
        assert sorted(T.names) == ["P1", "S1"]
        assert F.names == ["S2"]
        assert verify_torsion_pair(T, F).ok

    def test_pair_at_extremes(self, a2_universe, path_stability):
        sf = path_stability("a2-mgs3")
        T, F = torsion_pair_at(sf, PhaseValue(1), a2_universe)
        assert len(T) == 0 and len(F) == 3
        T, F = torsion_pair_at(sf, PhaseValue(0), a2_universe)
        assert len(T) == 3 and len(F) == 0

    def test_torsion_class_is_filt_of_semistables(self, a2_universe, path_stability):
        U = a2_universe
        sf = path_stability("a2-mgs3")
        for value in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            p = PhaseValue(value)
            T, _ = torsion_pair_at(sf, p, U)
            assert filt_closure(semistables_at_least(sf, p, U), fac=True) == T

    def test_broken_pair_certificate(self, a2_universe):
        U = a2_universe
        check = verify_torsion_pair(by_name(U, "S1"), by_name(U, "S2"))
        assert not check.ok
        assert check.certificate == {"kind": "torsion_free_not_maximal", "module": "P1"}

    def test_hom_certificate(self, a2_universe):
        U = a2_universe
        check = verify_torsion_pair(by_name(U, "P1"), by_name(U, "S1"))
        assert check.certificate["kind"] == "hom"


class TestMaximalGreenSequences:

    def test_three_step_chain(self, a2_universe, path_stability):
        U = a2_universe
        sf = path_stability("a2-mgs3")
        chain = chain_of_torsion_classes(sf, U)
        assert [c.names for c in chain.classes] == [[], ["S1"], ["S1", "P1"], ["S2", "S1", "P1"]]
        assert chain.steps == 3
        report = verify_mgs(chain, sf, U)
        assert report.verdict
        assert report.oracle_verdict is True
        assert [c["stable"] for c in report.certificates] == ["S1", "P1", "S2"]

    def test_two_step_chain(self, a2_universe, path_stability):
        U = a2_universe
        sf = path_stability("a2-mgs2")
        chain = chain_of_torsion_classes(sf, U)
        assert [c.names for c in chain.classes] == [[], ["S2"], ["S2", "S1", "P1"]]
        assert verify_mgs(chain, sf, U).verdict

    def test_diagonal_is_not_maximal_green(self, a2_universe, path_stability):
        U = a2_universe
        sf = path_stability("a2-diagonal")
        assert attained_phases(sf, U) == [PhaseValue(Fraction(1, 2))]
        assert not is_discrete(sf, U)
        report = verify_mgs(chain_of_torsion_classes(sf, U), sf, U)
        assert not report.verdict
        assert report.oracle_verdict is False
        assert {"kind": "stables", "phase": "1/2", "modules": ["S2", "S1"]} in report.certificates

    def test_parallel_chain_matches_serial(self, a3_universe, path_file):
        U = a3_universe
        sf = induced_stability(load_path(path_file("a3-generic"), 3), U)
        serial = chain_of_torsion_classes(sf, U)
        parallel = chain_of_torsion_classes(sf, U, max_workers=4)
        assert serial.classes == parallel.classes
        assert serial.phases == parallel.phases

    def test_stables_at(self, a2_universe):
        sf = LinearCharge((0, 0), (1, 1))
        assert sorted(a2_universe.ids[i] for i in stables_at(sf, PhaseValue(0), a2_universe)) \
            == ["S1", "S2"]

    def test_oracle_skipped_above_cap(self, a2, path_file):
        U = ModuleUniverse(a2, (1, 1), Limits(oracle_max_indecomposables=2))
        sf = induced_stability(load_path(path_file("a2-mgs3"), 2), U)
        report = verify_mgs(chain_of_torsion_classes(sf, U), sf, U)
        assert report.verdict
        assert report.oracle_verdict is None

    def test_chain_endpoints_checked(self, a2_universe, path_stability):
        U = a2_universe
        sf = path_stability("a2-mgs3")
        chain = chain_of_torsion_classes(sf, U)
        chain.entries = chain.entries[:-1]
        report = verify_mgs(chain, sf, U)
        assert not report.verdict
        assert report.certificates[0]["kind"] == "endpoints"
