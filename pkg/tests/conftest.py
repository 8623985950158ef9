import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mediangle import generators as gen  # noqa: E402
from mediangle.signs import topes_and_graph  # noqa: E402


@pytest.fixture(scope="session")
def q3():
    return gen.hypercube(3)


@pytest.fixture(scope="session")
def c6():
    return gen.even_cycle(6)


@pytest.fixture(scope="session")
def a3():
    return gen.coxeter_graph("A3")


@pytest.fixture(scope="session")
def uniform4_system():
    return gen.central_arrangement_system(gen.uniform_rank3_four())


@pytest.fixture(scope="session")
def uniform4(uniform4_system):
    return topes_and_graph(uniform4_system, name="uniform4")[1]


def q3_vertex(bits: str) -> int:
    """Index of the ``Q3`` vertex with label ``bits`` (character k = bit k)."""
    return sum(1 << k for k, c in enumerate(bits) if c == "1")


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
