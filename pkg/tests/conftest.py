import pytest
from hypothesis import settings

from spunblf.surface import TorusKnotParams

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PQ_SET = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]


@pytest.fixture(params=PQ_SET, ids=lambda pq: f"T{pq[0]}_{pq[1]}")
def params(request):
    return TorusKnotParams(*request.param)


@pytest.fixture
def trefoil():
    return TorusKnotParams(2, 3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
