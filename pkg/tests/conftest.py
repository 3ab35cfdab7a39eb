"""Shared fixtures: builtin algebras, their module universes and the fixture files."""

import json
from pathlib import Path

import pytest

from quiver_stability.catalog.builtins import builtin
from quiver_stability.torsion.universe import ModuleUniverse

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
SCHEMAS = ROOT / "config" / "schemas"


def load_schema(command: str) -> dict:
    with open(SCHEMAS / f"{command}.schema.json", "r", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture(scope="session")
def a2():
    return builtin("A2")


@pytest.fixture(scope="session")
def a3():
    return builtin("A3")


@pytest.fixture(scope="session")
def kronecker():
    return builtin("kronecker")


@pytest.fixture(scope="session")
def a2_universe(a2):
    return ModuleUniverse(a2, (1, 1))


@pytest.fixture(scope="session")
def a3_universe(a3):
    return ModuleUniverse(a3, (1, 1, 1))


@pytest.fixture(scope="session")
def kronecker_universe(kronecker):
    return ModuleUniverse(kronecker, (1, 1))


@pytest.fixture
def path_file():
    def resolve(name: str) -> Path:
        return FIXTURES / "paths" / f"{name}.path"
    return resolve
