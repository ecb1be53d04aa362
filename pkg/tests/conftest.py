import pytest

import YM_Beta.state as state
from YM_Beta.lie import builtin_algebra, builtin_representation


@pytest.fixture(autouse=True)
def reset_state():
    """Reset global configuration between tests; the algebra cache is kept."""
    original_workers = state.WORKERS
    original_framing = state.DEFAULT_FRAMING
    original_timeout = state.TOOL_TIMEOUT
    original_grid = state.EPS_GRID
    yield
    state.WORKERS = original_workers
    state.DEFAULT_FRAMING = original_framing
    state.TOOL_TIMEOUT = original_timeout
    state.EPS_GRID = original_grid


@pytest.fixture
def su2():
    return builtin_algebra("su2")


@pytest.fixture
def su3():
    return builtin_algebra("su3")


@pytest.fixture
def su2_adjoint(su2):
    return builtin_representation(su2, "adjoint")


@pytest.fixture
def su3_fund_conj(su3):
    return builtin_representation(su3, "fund+conj")
