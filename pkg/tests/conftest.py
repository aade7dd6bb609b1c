import numpy as np
import pytest

from hgsa.fixtures import fixture_path, list_fixtures
from hgsa.pauli import load_hamiltonian
from hgsa.vqe import build_ansatz, fci_energy


@pytest.fixture(scope="session")
def fixture_names():
    names = list_fixtures()
    assert names, "no shipped fixtures found; regenerate with hamgen --all"
    return names


@pytest.fixture(scope="session")
def load_fixture():
    cache = {}

    def _load(name):
        if name not in cache:
            cache[name] = load_hamiltonian(fixture_path(name))
        return cache[name]

    return _load


@pytest.fixture(scope="session")
def plan_for(load_fixture):
    cache = {}

    def _plan(name, layers=1):
        key = (name, layers)
        if key not in cache:
            cache[key] = build_ansatz(load_fixture(name), layers=layers)
        return cache[key]

    return _plan


@pytest.fixture(scope="session")
def fci_for(load_fixture):
    cache = {}

    def _fci(name):
        if name not in cache:
            cache[name] = fci_energy(load_fixture(name))
        return cache[name]

    return _fci


def _ref_comment_values(path):
    """Pull the `# ref_hf` / `# ref_fci` comment values out of a fixture."""
    refs = {}
    for line in path.read_text().splitlines():
        if line.startswith("# ref_"):
            _, key, value = line.split()
            refs[key[4:]] = float(value)
    return refs


@pytest.fixture(scope="session")
def ref_values():
    def _refs(name):
        return _ref_comment_values(fixture_path(name))

    return _refs
