import pytest

from hyparr import fixtures


@pytest.fixture
def b2():
    return fixtures.b2()


@pytest.fixture
def k3():
    return fixtures.k3()


@pytest.fixture
def rep4():
    return fixtures.rep4()


@pytest.fixture
def nu4():
    return fixtures.nu4()


@pytest.fixture
def k4():
    return fixtures.k4()


@pytest.fixture
def all_fixtures(b2, k3, rep4, nu4, k4):
    return {"b2": b2, "k3": k3, "rep4": rep4, "nu4": nu4, "k4": k4}
