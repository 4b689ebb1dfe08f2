import time

import pytest

_SESSION_T0 = time.perf_counter()


@pytest.fixture(scope="session")
def session_elapsed():
    """Callable returning seconds since the test session started."""
    return lambda: time.perf_counter() - _SESSION_T0


def pytest_sessionfinish(session, exitstatus):
    print(f"\nTOTAL SUITE WALL TIME: {time.perf_counter() - _SESSION_T0:.1f} s")
