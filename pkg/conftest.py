# Shared pytest fixtures. Living at the repository root also puts the
# top-level modules on sys.path for the tests under tests/.

import os

from hypothesis import settings
import pytest

import instances
import models

# Brute-force oracles make single examples slow; no per-example deadline
settings.register_profile("urm", deadline=None)
settings.load_profile("urm")

FIXTURES_DIR = os.path.join(
    os.path.abspath(os.path.dirname(__file__)), 'fixtures')


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def fig1():
    return instances.fig1()


@pytest.fixture
def fig2():
    return instances.fig2()


@pytest.fixture
def c4():
    return models.UndirectedGraph.from_edges(
        4, [(0, 1), (1, 2), (2, 3), (0, 3)])

