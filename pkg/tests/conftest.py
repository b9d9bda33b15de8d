from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kalliance.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, keep) if b], f"h{n}")


@st.composite
def graph_and_k(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    k = draw(st.integers(-g.Delta, g.Delta))
    return g, k


@pytest.fixture
def tmp_graph(tmp_path):
    def write(text, name="g.edges"):
        p = tmp_path / name
        p.write_text(text)
        return p

    return write


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
