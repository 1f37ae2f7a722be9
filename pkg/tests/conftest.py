import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from rulingset.graph import build_graph  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, max_n=12, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return build_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True))
    return build_graph(n, chosen)


def seeded_graphs(count, max_n, ps=(0.1, 0.2, 0.3, 0.5), seed=0, min_n=1):
    """Deterministic sweep of G(n, p) instances as (n, edges, graph)."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice(ps)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        yield n, edges, build_graph(n, edges)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
