import pytest

from hyperqudit import named_ring


@pytest.fixture(scope="session")
def f2():
    return named_ring("F2")


@pytest.fixture(scope="session")
def f3():
    return named_ring("F3")


@pytest.fixture(scope="session")
def f4():
    return named_ring("F4")


@pytest.fixture(scope="session")
def f5():
    return named_ring("F5")


@pytest.fixture(scope="session")
def z4():
    return named_ring("Z4")


@pytest.fixture(scope="session")
def gr42():
    return named_ring("GR(4,2)")


@pytest.fixture(scope="session")
def gr43():
    return named_ring("GR(4,3)")
