import pytest

from cyclesat import build_G, build_H, extend_with_duplicates


@pytest.fixture(scope="session")
def g55():
    return build_G(5, 5)


@pytest.fixture(scope="session")
def g56():
    return build_G(5, 6)


@pytest.fixture(scope="session")
def g76():
    return build_G(7, 6)


@pytest.fixture(scope="session")
def g97():
    return build_G(9, 7)


@pytest.fixture(scope="session")
def h5():
    return build_H(5)


@pytest.fixture(scope="session")
def h6():
    return build_H(6)


@pytest.fixture(scope="session")
def g55_t3(g55):
    return extend_with_duplicates(g55, 3)
