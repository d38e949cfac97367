import random

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--qplab-seed",
        type=int,
        default=20260809,
        help="seed for the randomized property suites",
    )


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--qplab-seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)
