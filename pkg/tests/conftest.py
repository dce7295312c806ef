import pytest

from fkalg.noncrossing import NoncrossingTree

EXAMPLE_EDGES = ((1, 2), (1, 6), (3, 5), (3, 6), (4, 5), (6, 8), (7, 8))


@pytest.fixture
def example_tree():
    return NoncrossingTree(8, EXAMPLE_EDGES)


ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[k])
