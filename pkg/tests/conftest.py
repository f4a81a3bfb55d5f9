import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kmcrystals import validate_cartan

from oracles import MATRICES


@pytest.fixture(scope="session")
def sl2():
    return validate_cartan(MATRICES["A1"])


@pytest.fixture(scope="session")
def a2():
    return validate_cartan(MATRICES["A2"])


@pytest.fixture(scope="session")
def a3():
    return validate_cartan(MATRICES["A3"])


@pytest.fixture(scope="session")
def c2():
    return validate_cartan(MATRICES["C2"])


@pytest.fixture(scope="session")
def g2():
    return validate_cartan(MATRICES["G2"])


@pytest.fixture(scope="session")
def a1xa1():
    return validate_cartan(MATRICES["A1xA1"])


@pytest.fixture(scope="session")
def affine():
    return validate_cartan(MATRICES["AFF"])


def fw(cartan, *coords):
    return cartan.weight(lam=coords)
