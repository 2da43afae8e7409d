import pytest

from antibidiag import float64, rational


@pytest.fixture
def fb():
    return float64()


@pytest.fixture
def rb():
    return rational()
