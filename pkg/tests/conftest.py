import pytest

RESULTS = pytest.StashKey[dict]()
CRITERIA = range(1, 14)


def pytest_configure(config):
    config.stash[RESULTS] = {}


@pytest.fixture
def record(request):
    """``record(k, ok, summary)`` stores the verdict for acceptance criterion ``k``."""
    results = request.config.stash[RESULTS]

    def rec(k: int, ok: bool, summary: str) -> None:
        results[k] = (ok, summary)
        print(f"CRITERION {k}: {'PASS' if ok else 'FAIL'}  {summary}")
    return rec


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[RESULTS]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in CRITERIA:
        if k in results:
            ok, summary = results[k]
            terminalreporter.write_line(f"CRITERION {k}: {'PASS' if ok else 'FAIL'}  {summary}")
        else:
            terminalreporter.write_line(f"CRITERION {k}: NOT RUN")
