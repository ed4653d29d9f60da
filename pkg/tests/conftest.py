import os
import sys

import pytest
from hypothesis import settings, strategies as st

from arbor.order import build_tree

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@st.composite
def trees(draw, min_nodes=1, max_nodes=9):
    n = draw(st.integers(min_nodes, max_nodes))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    nodes = [f"n{i}" for i in range(n)]
    return build_tree(nodes, [(f"n{p}", f"n{i}") for i, p in enumerate(parents, start=1)])


def raw(t):
    return list(t.nodes), t.edges


@pytest.fixture
def fixture_path():
    return lambda name: os.path.join(FIXTURES, name)


CRITERIA_LINES = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES):
            terminalreporter.write_line(line)
