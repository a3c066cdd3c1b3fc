import random

import pytest

from hermdig import HermDig
from hermdig.config import Settings
from hermdig.digraphs import random_digraph


@pytest.fixture
def hd(tmp_path):
    instance = HermDig(settings=Settings(work_dir=str(tmp_path)))
    yield instance
    instance.close()


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def random_digraphs(rng):
    """A fixed sample of labeled digraphs of order 1..7."""
    return [random_digraph(rng.randint(1, 7), rng) for _ in range(40)]
