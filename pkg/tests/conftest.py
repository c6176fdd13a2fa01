import logging
import os

os.environ['DIGHOM_LOG_DIR'] = ''

import pytest  # noqa: E402

from core import DigitalImage  # noqa: E402
from validation import random_corpus  # noqa: E402

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
RING = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)]


@pytest.fixture
def square4():
    return DigitalImage.from_points(SQUARE, u=1)


@pytest.fixture
def square4_u2():
    return DigitalImage.from_points(SQUARE, u=2)


@pytest.fixture
def ring8():
    return DigitalImage.from_points(RING, u=1)


@pytest.fixture
def point():
    return DigitalImage.from_points([(0, 0)], u=1)


@pytest.fixture
def two_points():
    return DigitalImage.from_points([(0,), (1,)], u=1)


@pytest.fixture
def cycle5():
    """A 5-cycle given by explicit edges on five points of Z."""
    points = [(i,) for i in range(5)]
    edges = [((i,), ((i + 1) % 5,)) for i in range(5)]
    return DigitalImage.from_points(points, u=1, edges=edges)


@pytest.fixture(scope='session')
def corpus():
    return random_corpus(seed=11, size=12, max_points=6)


@pytest.fixture
def dighom_records():
    """Records logged to the 'dighom' logger, which does not propagate."""
    records = []

    class Collect(logging.Handler):
        def emit(self, record):
            records.append(record)

    handler = Collect(level=logging.DEBUG)
    logger = logging.getLogger('dighom')
    logger.addHandler(handler)
    yield records
    logger.removeHandler(handler)
