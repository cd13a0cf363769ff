from __future__ import annotations

import pytest
from hypothesis import settings

from charnum.quartic_divisors import all_columns
from charnum.quartic_solver import solve

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def columns():
    return all_columns()


@pytest.fixture(scope="session")
def solution(columns):
    return solve(columns)
