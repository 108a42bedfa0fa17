import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(pytestconfig):
    """Record one acceptance line, then assert it."""
    lines = pytestconfig.stash.setdefault(_LINES, [])

    def check(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        lines.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
