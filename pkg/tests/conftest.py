import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from partialdet.algebra import ComplexField, PrimeField, RationalField


@pytest.fixture
def rat():
    return RationalField()


@pytest.fixture
def gf7():
    return PrimeField(7)


@pytest.fixture
def gf2():
    return PrimeField(2)


@pytest.fixture
def c64():
    return ComplexField()
