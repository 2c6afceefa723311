from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture
def c3():
    from goodpairs import DiGraph

    return DiGraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def bior_k3():
    from goodpairs import DiGraph

    return DiGraph(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)])


@pytest.fixture
def k2bar():
    from goodpairs import DiGraph

    return DiGraph(2)
