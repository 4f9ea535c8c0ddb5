import random

import pytest

from groupoid_card.services import group_service

SEED = 20240617


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(scope="session")
def small_groups():
    return group_service.small_groups()


@pytest.fixture(scope="session")
def tiny_groups():
    """Groups of order at most 4"""
    return group_service.small_groups(4)
