import pytest

from helpers import THREE_SETS, venn_of
from ietube.core import SetSystem, index_set


@pytest.fixture
def three_sets_system():
    return SetSystem(3, tuple(index_set(r) for r in THREE_SETS))


@pytest.fixture
def three_sets():
    return venn_of(3, THREE_SETS)


_GATE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_GATE_KEY] = []


@pytest.fixture
def gate(request):
    """Record one acceptance line ``(criterion, passed, detail)`` and print it."""
    lines = request.config.stash[_GATE_KEY]

    def record(number, title, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        lines.append((number, line))
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_GATE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
