import pytest

import detsense as d


@pytest.fixture(scope="session")
def bipolar_6_2():
    return d.bipolar_matrix(6, 2)


@pytest.fixture(scope="session")
def bipolar_3_1():
    return d.bipolar_matrix(3, 1)


@pytest.fixture(scope="session")
def pn_7():
    return d.bipolar_matrix(3, 3)


@pytest.fixture(scope="session")
def devore_8_2():
    return d.devore_matrix(8, 2)


@pytest.fixture(scope="session")
def devore_7_2():
    return d.devore_matrix(7, 2)


@pytest.fixture(scope="session")
def ternary_49(devore_7_2, bipolar_3_1):
    return d.ternary_matrix(devore_7_2, bipolar_3_1)


@pytest.fixture(scope="session")
def ooc_1():
    return d.ooc_matrix(1)
