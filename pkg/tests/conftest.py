import numpy as np
import pytest

from nipgm.data_io import bundled_dataset, dataset_for_case
from nipgm.series import RawSeries


@pytest.fixture
def europe():
    return bundled_dataset("wind_europe")


@pytest.fixture
def synthetic():
    """A smooth increasing series with a held-out tail."""
    k = np.arange(1, 11)
    return RawSeries(2000 + k, 50.0 * np.exp(0.08 * k) + 3.0 * k, train=8, name="synthetic")


@pytest.fixture(params=["case1", "case2", "case3", "europe", "north_america", "asia", "world"])
def case(request):
    return request.param, dataset_for_case(request.param)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
