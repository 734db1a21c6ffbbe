import pytest

RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion for the end-of-run summary."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    RESULTS[number] = (title, False)
    yield
    RESULTS[number] = (title, True)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, ok = RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
