import numpy as np
import pytest

from mpcode.conf import Conf
from mpcode.modules import CodeSpec
from mpcode.services import codes


@pytest.fixture(scope="session")
def shieh_263():
    return codes.shieh_spec(2, 6, 3)


@pytest.fixture(scope="session")
def shieh_263_book(shieh_263):
    return codes.enumerate_codebook(shieh_263)


@pytest.fixture(scope="session")
def shieh_242():
    return codes.shieh_spec(2, 4, 2)


@pytest.fixture(scope="session")
def shieh_242_book(shieh_242):
    return codes.enumerate_codebook(shieh_242)


@pytest.fixture(scope="session")
def full_22():
    return CodeSpec((2, 2), (1, 2))


@pytest.fixture(scope="session")
def full_22_book(full_22):
    return codes.enumerate_codebook(full_22)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def restore_conf():
    saved = {k: v for k, v in vars(Conf).items() if k.isupper()}
    yield Conf
    for k, v in saved.items():
        setattr(Conf, k, v)
