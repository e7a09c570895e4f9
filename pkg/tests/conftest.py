import pytest
from hypothesis import settings

from heishardy.geometry import heis_space
from heishardy.quadrature import QuadratureSpec

# reproducible property-test runs
settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")


@pytest.fixture(scope="session")
def space1():
    return heis_space(1)


@pytest.fixture(scope="session")
def space2():
    return heis_space(2)


@pytest.fixture(scope="session")
def spec():
    return QuadratureSpec()
