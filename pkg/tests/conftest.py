import pytest

from molsnet import make_mols_family


@pytest.fixture(scope="session")
def family4():
    return make_mols_family(4)


@pytest.fixture(scope="session")
def family5():
    return make_mols_family(5)


@pytest.fixture(scope="session")
def family7():
    return make_mols_family(7)
