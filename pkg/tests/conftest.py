import pytest

from hopfinv.exactfield import FieldSpec
from hopfinv.models import example31, sweedler, taft

QQ = FieldSpec.rational()
F3 = FieldSpec.prime(3)


@pytest.fixture(scope="session")
def H4():
    return sweedler()


@pytest.fixture(scope="session")
def tafts():
    return {N: taft(N) for N in (2, 3, 4)}


@pytest.fixture(scope="session")
def ex31():
    return {N: example31(N) for N in (2, 3)}


@pytest.fixture(scope="session")
def ex31_f3():
    return example31(2, F3)
