import random
from fractions import Fraction

import pytest

from bcp.codec import ProbabilityModel


def random_model(rng: random.Random, max_weight: int = 20) -> ProbabilityModel:
    """Strictly positive rational model summing exactly to 1."""
    weights = [rng.randint(1, max_weight) for _ in range(10)]
    total = sum(weights)
    return ProbabilityModel(tuple(Fraction(w, total) for w in weights))


def random_digits(rng: random.Random, max_len: int = 64) -> str:
    return "".join(rng.choice("0123456789") for _ in range(rng.randint(1, max_len)))


@pytest.fixture
def uniform():
    return ProbabilityModel.uniform()
