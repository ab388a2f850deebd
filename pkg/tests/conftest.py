"""Test configuration for geo3 tests."""

from pathlib import Path

import pytest
from dotenv import load_dotenv

from geo3.config import Config


def pytest_configure(config):
    """Load environment variables from .env file for all tests."""
    # Find the project root directory (where .env is located)
    project_root = Path(__file__).parent.parent
    env_file = project_root / ".env"

    if env_file.exists():
        load_dotenv(env_file)
        print(f"Loaded environment variables from {env_file}")
    else:
        print(f"No .env file found at {env_file}")


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Every test starts from the built-in defaults."""
    monkeypatch.delenv("GEO3_TOLERANCE", raising=False)
    Config.reset()
    yield
    Config.reset()
