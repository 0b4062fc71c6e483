import numpy as np
import pytest

from ccr_opposite.cones import cone_from_generators
from ccr_opposite.hilbert import RepContext
from ccr_opposite.modules import cone_module


@pytest.fixture
def quadrant():
    return cone_from_generators(2, [[1, 0], [0, 1]])


@pytest.fixture
def skew():
    return cone_from_generators(2, [[1, 0], [1, 1]])


@pytest.fixture
def halfline():
    return cone_from_generators(1, [[1]])


@pytest.fixture
def ctx(quadrant):
    return RepContext(cone_module(quadrant))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
