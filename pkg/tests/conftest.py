import pytest

import posetzoo


@pytest.fixture
def trellis():
    return posetzoo.trellis()


@pytest.fixture
def trellis_net():
    return posetzoo.trellis_network()


@pytest.fixture
def coned():
    return posetzoo.coned_circle_plus_point()
