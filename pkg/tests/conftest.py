"""Shared fixtures: small parameter grids used across the suite."""

import pytest

from cyclewords import CycleParams


def all_params(max_n):
    return [CycleParams(n, k) for n in range(1, max_n + 1) for k in range(1, n + 1)]


@pytest.fixture(scope="session")
def params_grid_small():
    return all_params(5)


@pytest.fixture(scope="session")
def params_grid_medium():
    return all_params(7)
