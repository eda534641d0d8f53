import pytest

from preord import objects_upto


@pytest.fixture(scope="session")
def objects1():
    return objects_upto(1)


@pytest.fixture(scope="session")
def objects2():
    return objects_upto(2)


@pytest.fixture(scope="session")
def objects3():
    return objects_upto(3)


@pytest.fixture(scope="session")
def objects4():
    return objects_upto(4)
