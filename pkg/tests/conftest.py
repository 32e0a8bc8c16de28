"""
Shared fixtures and hypothesis profiles
"""
from pathlib import Path

import hypothesis
import pytest

from src.chains.gadget import read_gadget
from src.graphs.io import load_text
from src.graphs.model import Graph, complete_graph

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def gadget_path() -> Path:
    return FIXTURES / "gadget.txt"


@pytest.fixture
def gadget(gadget_path):
    return read_gadget(load_text(gadget_path))
