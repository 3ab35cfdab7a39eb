"""Acceptance checks on the Kronecker window (2,2) over F_2."""

import pytest

from quiver_stability.catalog.stability import (
    STARRED_ONE, kronecker_slope, kronecker_starred_slope, starred_torsion_class,
)
from quiver_stability.repcore.homs import is_isomorphic
from quiver_stability.stability.functions import LinearCharge
from quiver_stability.stability.phase import PhaseValue
from quiver_stability.stability.semistability import (
    Direction, extremal_destabilizer, hn_filtration, hn_filtration_by_quotients, is_semistable,
    seesaw_violations,
)
from quiver_stability.torsion.classes import is_torsion_class, torsion_class_at
from quiver_stability.torsion.universe import ModuleUniverse
from quiver_stability.wallchamber.paths import (
    induced_stability, king_agreement, load_path, redtorsion_parameters, verify_redtorsion,
)

from .conftest import FIXTURES

pytestmark = pytest.mark.slow

PATHS = ["kronecker-cross", "kronecker-cross-flipped"]


@pytest.fixture(scope="module")
def window(kronecker):
    return ModuleUniverse(kronecker, (2, 2))


@pytest.fixture(scope="module")
def starred(window):
    return kronecker_starred_slope([0], window)


def load_kronecker_path(name: str):
    return load_path(FIXTURES / "paths" / f"{name}.path")


@pytest.fixture(scope="module", params=["slope", "charge"] + PATHS)
def dims_function(request, window):
    """Every shipped function whose phase depends on the dimension vector only."""
    if request.param == "slope":
        return kronecker_slope()
    if request.param == "charge":
        return LinearCharge((0, 1), (1, 1))
    # Verification re-runs the see-saw and King agreement on the window.
    return induced_stability(load_kronecker_path(request.param), window, verify=True)


def factor_names(U, factors):
    return [U.name_of(U.decompose(factor)) for factor in factors]


class TestKroneckerWindow:

    def test_size(self, window):
        assert len(window) == 11

    def test_seesaw_on_every_class(self, window, dims_function):
        for module_class in window.all_classes:
            assert seesaw_violations(dims_function, module_class.module, window.limits) == [], \
                module_class.name

    def test_hn_phases_decrease(self, window, dims_function):
        for module_class in window.all_classes:
            hn = hn_filtration(dims_function, module_class.module, window.limits, verify=True)
            assert all(a > b for a, b in zip(hn.phases, hn.phases[1:])), module_class.name
            assert all(is_semistable(dims_function, F, window.limits) for F in hn.factors)

    def test_hn_constructions_agree(self, window, dims_function):
        for module_class in window.all_classes:
            M = module_class.module
            by_subs = hn_filtration(dims_function, M, window.limits, verify=True)
            by_quotients = hn_filtration_by_quotients(dims_function, M, window.limits)
            assert factor_names(window, by_subs.factors) == factor_names(window, by_quotients)
            assert all(is_isomorphic(a, b, window.limits)
                       for a, b in zip(by_subs.factors, by_quotients))

    def test_hn_ends_are_extremal(self, window, dims_function):
        for module_class in window.all_classes:
            M = module_class.module
            hn = hn_filtration(dims_function, M, window.limits, verify=True)
            first = extremal_destabilizer(dims_function, M, Direction.SUBOBJECT, window.limits)
            last = extremal_destabilizer(dims_function, M, Direction.QUOTIENT, window.limits)
            assert is_isomorphic(hn.factors[0], first.object, window.limits), module_class.name
            assert is_isomorphic(hn.factors[-1], last.object, window.limits), module_class.name
            assert hn.phases[0] == first.phase
            assert hn.phases[-1] == last.phase

    @pytest.mark.parametrize("name", PATHS)
    def test_path_agrees_with_king(self, window, name):
        path = load_kronecker_path(name)
        sf = induced_stability(path, window, verify=True)
        assert king_agreement(sf, path, window) == []

    @pytest.mark.parametrize("name", PATHS)
    def test_redtorsion(self, window, name):
        path = load_kronecker_path(name)
        sf = induced_stability(path, window, verify=True)
        for t in redtorsion_parameters(path, window):
            assert verify_redtorsion(path, t, window, sf).ok, str(t)


class TestStarredSlopeWindow:

    def test_regulars_split_around_s(self, window, starred):
        phases = {name: starred.phase(M) for name, M in zip(window.ids, window.indecomposables)}
        assert phases["R[0]1"] == PhaseValue(1)
        assert phases["R[0]2"] == PhaseValue(1)
        assert phases["R[1]1"] == STARRED_ONE
        assert phases["R[inf]2"] == STARRED_ONE
        assert phases["R[x^2+x+1]1"] == STARRED_ONE
        assert phases["R[0]1"] < phases["R[1]1"]

    def test_seesaw_validated(self, window, starred):
        assert starred.seesaw_violation() is None
        for name, M in zip(window.ids, window.indecomposables):
            assert seesaw_violations(starred, M, window.limits) == [], name

    def test_higher_degree_point_is_noted(self, starred):
        assert len(starred.notes) == 1
        assert starred.notes[0].startswith("R[x^2+x+1]1 ")
        assert "complement of S" in starred.notes[0]

    def test_higher_degree_point_joins_s(self, window):
        sf = kronecker_starred_slope([0], window, higher_degree_in_s=True)
        index = window.ids.index("R[x^2+x+1]1")
        assert sf.phase(window.indecomposables[index]) == PhaseValue(1)
        assert "placed in S" in sf.notes[0]

    def test_torsion_class_of_s(self, window):
        T = starred_torsion_class([0], window)
        assert sorted(T.names) == ["I1", "R[0]1", "R[0]2", "S1"]
        assert not {"S2", "P1"} & set(T.names)
        assert is_torsion_class(T)

    def test_phase_one_holds_every_regular(self, window, starred):
        # 1 < 1*, so T_1 cannot separate S from its complement.
        T = torsion_class_at(starred, PhaseValue(1), window)
        assert {"R[0]1", "R[1]1", "R[inf]1", "R[x^2+x+1]1"} <= set(T.names)
