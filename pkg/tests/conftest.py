import pytest

from swsurgery.models import e1, v_n, w_n, y_n, z_n


@pytest.fixture(scope="session")
def e1_model():
    return e1()


@pytest.fixture(scope="session")
def y3():
    return y_n(3)


@pytest.fixture(scope="session")
def z3():
    return z_n(3)


@pytest.fixture(scope="session")
def v3():
    return v_n(3)


@pytest.fixture(scope="session")
def w3():
    return w_n(3)
