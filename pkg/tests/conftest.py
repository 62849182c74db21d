import numpy as np
import pytest

from services.group_core import FiniteGroup, make_group
from tests.helpers import Q8_TABLE


@pytest.fixture
def z4() -> FiniteGroup:
    return make_group("cyclic:4")


@pytest.fixture
def z6() -> FiniteGroup:
    return make_group("cyclic:6")


@pytest.fixture
def v4() -> FiniteGroup:
    return make_group("ea:2,2")


@pytest.fixture
def s3() -> FiniteGroup:
    return make_group("sym:3")


@pytest.fixture
def d4() -> FiniteGroup:
    return make_group("dihedral:4")


@pytest.fixture
def q8_table() -> FiniteGroup:
    return make_group(f"table:{Q8_TABLE}")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
