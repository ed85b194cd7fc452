import pytest

from artifact.preorder import bigex, e2_standard


@pytest.fixture(scope="session")
def bx():
    return bigex()


@pytest.fixture(scope="session")
def e2():
    return e2_standard()
