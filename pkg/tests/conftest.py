"""
Pytest configuration and shared fixtures
"""
import logging
from collections.abc import Generator

import pytest
from click.testing import CliRunner

from src.services.counting import MemoTable


# ============================================================================
# FIXTURES
# ============================================================================


@pytest.fixture
def memo() -> MemoTable:
    """Fresh memo table per test"""
    return MemoTable()


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def reset_root_logging() -> Generator[None, None, None]:
    """
    Drop handlers installed by CLI invocations

    The CLI binds its JSON handler to the stderr stream of the invocation;
    CliRunner closes that stream afterwards.
    """
    yield
    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)


# ============================================================================
# CONFIGURATION
# ============================================================================


def pytest_configure(config: pytest.Config) -> None:
    """Register custom markers"""
    config.addinivalue_line("markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')")
    config.addinivalue_line("markers", "integration: marks tests as integration tests")
    config.addinivalue_line("markers", "unit: marks tests as unit tests")
