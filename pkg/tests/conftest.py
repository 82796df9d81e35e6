import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from artin.graph import LabeledGraph, parse_graph  # noqa: E402

GRAPHS = HERE.parent / "graphs"


@pytest.fixture
def load():
    return lambda name: parse_graph((GRAPHS / f"{name}.json").read_text())


def graph(desc: str, vertices: str | None = None) -> LabeledGraph:
    """Compact graphs for tests: ``"xv2 xw2 vw4"`` (single-letter names)."""
    edges = [(t[0], t[1], int(t[2:])) for t in desc.split()]
    if vertices is None:
        seen = dict.fromkeys(c for u, v, _ in edges for c in (u, v))
        vertices = "".join(seen)
    return LabeledGraph(tuple(vertices), edges)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
