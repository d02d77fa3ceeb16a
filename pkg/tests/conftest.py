import pytest

from diavib import molecule_by_name


@pytest.fixture(scope="session")
def h2():
    return molecule_by_name("H2")


@pytest.fixture(scope="session")
def hcl():
    return molecule_by_name("HCl")
