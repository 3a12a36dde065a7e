"""Test configuration and fixtures."""

import pytest

from .config import get_settings
from .features.catalog import build
from .models.algebra import AlgebraSpec


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Isolate tests from a developer's GRADEDLIE_* environment."""
    for name in (
        "GRADEDLIE_THREADS",
        "GRADEDLIE_LOG_LEVEL",
        "GRADEDLIE_MAX_MATRIX_SIZE",
        "GRADEDLIE_DEFAULT_OUTPUT",
        "GRADEDLIE_JSON_INDENT",
    ):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def so_q_2_1():
    """so_1(5), the smallest so_q algebra."""
    return build(AlgebraSpec.so_q(2, 1))


@pytest.fixture(scope="session")
def so_q_3_1():
    """so_1(7)."""
    return build(AlgebraSpec.so_q(3, 1))


@pytest.fixture(scope="session")
def osp_1_1():
    """osp(1,0|2,2)."""
    return build(AlgebraSpec.osp(1, 1))


@pytest.fixture
def sample_spec_data():
    """Sample algebra spec payload."""
    return {"family": "so_q", "params": [3, 1]}
