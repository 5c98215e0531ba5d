import pytest

from drinfeld import DrinfeldModule, carlitz_module, ff_make


@pytest.fixture(scope="session")
def F2():
    return ff_make(2, 1, 0)


@pytest.fixture(scope="session")
def F3():
    return ff_make(3, 1, 0)


@pytest.fixture(scope="session")
def F4():
    return ff_make(2, 2, 0)


@pytest.fixture(scope="session")
def F9():
    return ff_make(3, 2, 0)


@pytest.fixture(scope="session")
def carlitz_f4(F4):
    """theta = w, rank 1, q = 2; the base example throughout."""
    return carlitz_module(F4)


@pytest.fixture(scope="session")
def rank2_f2(F2):
    return DrinfeldModule(F2, F2.one, [F2.one, F2.one])


@pytest.fixture(scope="session")
def rank2_f4(F4):
    return DrinfeldModule(F4, F4.gen, [F4.one, F4.gen])
