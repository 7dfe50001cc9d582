import random

import pytest
from hypothesis import HealthCheck, settings

from corecalc.poly import QQ, PolyRing, PrimeField

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(params=[PrimeField(), QQ], ids=["fp", "q"])
def field(request):
    return request.param


@pytest.fixture
def R3(field):
    return PolyRing(field, ["x0", "x1", "x2"])


@pytest.fixture
def rng():
    return random.Random(12345)
