import pytest

from gaussian_content import catalog

ACCEPTANCE_RESULTS = []


@pytest.fixture
def ring():
    return catalog.ring


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds, limit in sorted(ACCEPTANCE_RESULTS):
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] {number:2d}. {title} ({seconds:.2f}s, limit {limit}s)")
